"""Typed errors shared across the package."""


class CapExceededError(RuntimeError):
    """An exhaustive operation would exceed its configured size cap."""


class NotALatticeError(ValueError):
    """A finite poset is not a lattice.

    Carries the offending pair of labels in ``pair`` when known.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotGradedError(ValueError):
    """A height function was requested on a lattice that is not graded."""


class ReconstructionError(ValueError):
    """An axiom violation was detected while rebuilding a rank function."""
