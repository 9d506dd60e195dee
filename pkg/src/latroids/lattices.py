"""Explicit finite lattices: order/join/meet tables, structural predicates,
constructions (interval, dual, product), and concrete builders.

Lattices are fully materialized with O(N^2) tables; element labels are
domain objects (subsets, support vectors, rref bases, codes) so that
cross-module identification goes through labels, never raw indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import Code, enumerate_submodules
from .errors import NotALatticeError, NotGradedError
from .limits import LATTICE_CAP, SUBMODULE_CAP, check_cap
from .report import Check, Report
from .rings import Pir


class FiniteLattice:
    """A finite lattice on indexed, hashable labels."""

    def __init__(self, labels, leq: np.ndarray):
        self.labels = tuple(labels)
        self.size = len(self.labels)
        check_cap(self.size, LATTICE_CAP, "lattice size")
        if len(set(self.labels)) != self.size:
            raise ValueError("lattice labels must be distinct")
        self.leq = np.asarray(leq, dtype=bool)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        _check_partial_order(self.leq, self.labels)
        self.join = _bound_table(self.leq, self.labels, "join")
        self.meet = _bound_table(self.leq.T, self.labels, "meet")
        self.bottom = int(np.flatnonzero(self.leq.all(axis=1))[0])
        self.top = int(np.flatnonzero(self.leq.all(axis=0))[0])
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        self.covers = strict & ~(strict @ strict)
        self.atoms = tuple(int(i) for i in np.flatnonzero(self.covers[self.bottom]))
        self.height = _height_if_graded(self)

    # -- basics -------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FiniteLattice)
            and self.labels == other.labels
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self):
        return hash(self.labels)

    def __len__(self):
        return self.size

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.leq[a, b])

    @property
    def is_graded(self) -> bool:
        return self.height is not None

    def hgt(self, a: int) -> int:
        if self.height is None:
            raise NotGradedError("lattice is not graded")
        return self.height[a]

    def pairs(self):
        return itertools.product(range(self.size), repeat=2)

    def comparable_pairs(self):
        """All (a, b) with a < b."""
        rows, cols = np.nonzero(self.leq & ~np.eye(self.size, dtype=bool))
        return zip(rows.tolist(), cols.tolist())

    def __repr__(self):
        return f"FiniteLattice({self.size} elements)"


def _check_partial_order(leq: np.ndarray, labels) -> None:
    n = leq.shape[0]
    if leq.shape != (n, n):
        raise ValueError("leq must be square")
    if not leq.diagonal().all():
        i = int(np.flatnonzero(~leq.diagonal())[0])
        raise ValueError(f"order not reflexive at {labels[i]}")
    sym = leq & leq.T & ~np.eye(n, dtype=bool)
    if sym.any():
        a, b = map(int, np.argwhere(sym)[0])
        raise ValueError(f"order not antisymmetric at {labels[a]}, {labels[b]}")
    closure = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
    bad = closure & ~leq
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        raise ValueError(f"order not transitive at {labels[a]}, {labels[b]}")


def _bound_table(leq: np.ndarray, labels, what: str) -> np.ndarray:
    """Least upper bounds for the given order (pass leq.T for meets)."""
    n = leq.shape[0]
    out = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        for b in range(a, n):
            common = np.flatnonzero(leq[a] & leq[b])
            if common.size == 0:
                raise NotALatticeError(
                    f"no {what} for {labels[a]} and {labels[b]}",
                    pair=(labels[a], labels[b]),
                )
            sub = leq[np.ix_(common, common)]
            best = np.flatnonzero(sub.sum(axis=1) == common.size)
            if best.size != 1:
                raise NotALatticeError(
                    f"{what} of {labels[a]} and {labels[b]} is not unique",
                    pair=(labels[a], labels[b]),
                )
            out[a, b] = out[b, a] = common[best[0]]
    return out


def _height_if_graded(lat: FiniteLattice):
    order = sorted(range(lat.size), key=lambda i: int(lat.leq[:, i].sum()))
    height = [None] * lat.size
    height[lat.bottom] = 0
    for x in order:
        if x == lat.bottom:
            continue
        parents = np.flatnonzero(lat.covers[:, x])
        hs = {height[int(p)] for p in parents}
        if len(hs) != 1 or None in hs:
            return None
        height[x] = hs.pop() + 1
    return tuple(height)


def build_lattice(labels, leq) -> FiniteLattice:
    """Build from labels and either a callable leq(a, b) or a boolean matrix."""
    labels = tuple(labels)
    if callable(leq):
        mat = np.array([[bool(leq(a, b)) for b in labels] for a in labels], dtype=bool)
    else:
        mat = np.asarray(leq, dtype=bool)
    return FiniteLattice(labels, mat)


# -- structural predicates ----------------------------------------------------


@dataclass(frozen=True)
class LatticeFlags:
    is_graded: bool
    is_modular: bool
    is_distributive: bool
    is_complemented: bool
    is_relatively_complemented: bool


def is_modular_lattice(lat: FiniteLattice) -> bool:
    """The modular law on all triples with L1 <= L2."""
    n = lat.size
    idx = np.arange(n)
    for l3 in range(n):
        lhs = lat.join[idx[:, None], lat.meet[l3][None, :]]
        rhs = lat.meet[lat.join[:, l3][:, None], idx[None, :]]
        if ((lhs != rhs) & lat.leq).any():
            return False
    return True


def is_distributive_lattice(lat: FiniteLattice) -> bool:
    n = lat.size
    for l3 in range(n):
        lhs = lat.meet[np.arange(n)[:, None], lat.join[:, l3][None, :]]
        rhs = lat.join[lat.meet, lat.meet[:, l3][:, None]]
        if (lhs != rhs).any():
            return False
    return True


def is_complemented_lattice(lat: FiniteLattice) -> bool:
    ok = (lat.meet == lat.bottom) & (lat.join == lat.top)
    return bool(ok.any(axis=1).all())


def is_relatively_complemented_lattice(lat: FiniteLattice) -> bool:
    for a, b in lat.pairs():
        if not lat.leq[a, b]:
            continue
        interval_idx = np.flatnonzero(lat.leq[a] & lat.leq[:, b])
        m = lat.meet[np.ix_(interval_idx, interval_idx)]
        j = lat.join[np.ix_(interval_idx, interval_idx)]
        has = ((m == a) & (j == b)).any(axis=1)
        if not has.all():
            return False
    return True


def predicates(lat: FiniteLattice) -> LatticeFlags:
    return LatticeFlags(
        is_graded=lat.is_graded,
        is_modular=is_modular_lattice(lat),
        is_distributive=is_distributive_lattice(lat),
        is_complemented=is_complemented_lattice(lat),
        is_relatively_complemented=is_relatively_complemented_lattice(lat),
    )


def atoms_join_check(lat: FiniteLattice) -> Report:
    """Every element should be the join of the atoms below it (holds on
    relatively complemented lattices); reports the first failure."""
    witness = None
    for x in range(lat.size):
        below = [a for a in lat.atoms if lat.leq[a, x]]
        j = lat.bottom
        for a in below:
            j = int(lat.join[j, a])
        if j != x:
            witness = f"element {lat.labels[x]} is not the join of its atoms"
            break
    return Report.from_checks([Check("atoms_join", witness is None, witness or "")])


# -- constructions -------------------------------------------------------------


def interval(lat: FiniteLattice, a: int, b: int) -> FiniteLattice:
    """The sublattice of elements between a and b."""
    if not lat.leq[a, b]:
        raise ValueError(f"{lat.labels[a]} is not below {lat.labels[b]}")
    idx = np.flatnonzero(lat.leq[a] & lat.leq[:, b])
    labels = tuple(lat.labels[int(i)] for i in idx)
    return FiniteLattice(labels, lat.leq[np.ix_(idx, idx)])


def dual(lat: FiniteLattice) -> FiniteLattice:
    """Same labels, reversed order."""
    return FiniteLattice(lat.labels, lat.leq.T)


def product(lat1: FiniteLattice, lat2: FiniteLattice) -> FiniteLattice:
    labels = tuple(
        (a, b) for a in lat1.labels for b in lat2.labels
    )
    leq = np.kron(lat1.leq, lat2.leq).astype(bool)
    return FiniteLattice(labels, leq)


# -- concrete builders ----------------------------------------------------------


def boolean_lattice(n: int) -> FiniteLattice:
    """Subsets of {0..n-1} ordered by inclusion."""
    labels = [
        frozenset(c)
        for size in range(n + 1)
        for c in itertools.combinations(range(n), size)
    ]
    return build_lattice(labels, lambda a, b: a <= b)


def grid_lattice(ranges) -> FiniteLattice:
    """Integer vectors 0 <= v[i] <= ranges[i] under the product order."""
    labels = list(itertools.product(*(range(r + 1) for r in ranges)))
    return build_lattice(
        labels, lambda a, b: all(x <= y for x, y in zip(a, b))
    )


def chain_support_lattice(ring: Pir, n: int) -> FiniteLattice:
    """Support vectors of rectangular modules of R^n under the chain
    support: the grid with per-coordinate, per-factor ranges k_j, laid out
    coordinate-major to match ChainSupport."""
    ranges = [f.k for _ in range(n) for f in ring.factors]
    return grid_lattice(ranges)


def ideal_lattice(ring: Pir) -> FiniteLattice:
    """The ideals of R ordered by containment."""
    labels = sorted(ring.all_ideals(), key=lambda I: I.exponents)
    return build_lattice(labels, ring.ideal_leq)


def subspace_lattice(q: int, n: int, cap: int = 256) -> FiniteLattice:
    """All subspaces of F_q^n, labelled by rref bases, ordered by inclusion."""
    check_cap(q**n, cap, f"enumerating F_{q}^{n}")
    bases = linalg.all_subspaces(q, n)
    return build_lattice(
        tuple(bases), lambda a, b: linalg.span_contains(b, a, q)
    )


def submodule_lattice(code: Code, cap: int = SUBMODULE_CAP) -> FiniteLattice:
    """All submodules of the given code, ordered by inclusion."""
    subs = enumerate_submodules(code, cap=cap)
    return build_lattice(tuple(subs), lambda a, b: a.codewords <= b.codewords)


def rectangular_lattice(ring: Pir, n: int) -> FiniteLattice:
    """Rectangular modules I_1 x ... x I_n of R^n ordered by containment."""
    ideals = sorted(ring.all_ideals(), key=lambda I: I.exponents)
    labels = list(itertools.product(ideals, repeat=n))
    return build_lattice(
        labels,
        lambda a, b: all(ring.ideal_leq(x, y) for x, y in zip(a, b)),
    )
