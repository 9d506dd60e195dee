"""Default size caps for exhaustive operations.

Everything in this package is computed by exhaustive enumeration at desk
scale.  The caps below keep runaway inputs from looking like hangs; every
cap can be overridden per call (the CLI exposes ``--cap``).
"""

from .errors import CapExceededError

#: Cap on |R|^n wherever a full ambient space R^n is enumerated.
VECTOR_ENUM_CAP = 2**16

#: Cap on the number of codewords a span is allowed to materialize.
SPAN_CAP = 2**20

#: Cap on |C| for submodule enumeration.
SUBMODULE_CAP = 4096

#: Cap on the number of elements of an explicit lattice.
LATTICE_CAP = 4096


def check_cap(actual: int, cap: int, what: str) -> None:
    if actual > cap:
        raise CapExceededError(f"{what} needs {actual} > cap {cap}")
