"""Linear codes over product rings: materialized codeword sets, the module
invariants lambda / mu / M, submodule enumeration, and rectangular closures.

Codes are kept as full codeword sets in a canonical sorted order; every
downstream computation here is exhaustive, so set equality is the only
notion of code equality we need.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .limits import SPAN_CAP, SUBMODULE_CAP, check_cap
from .rings import Ideal, Pir, Vector, intlog


@dataclass(frozen=True, eq=False)
class Code:
    """An R-submodule of R^n, materialized as its full codeword set.

    Identity is by codeword set: the recorded generators are bookkeeping.
    """

    ring: Pir
    n: int
    generators: tuple[Vector, ...]
    codewords: frozenset[Vector]

    def __post_init__(self):
        for v in self.generators:
            if len(v) != self.n:
                raise ValueError(f"generator {v} does not have length {self.n}")

    def __eq__(self, other):
        return (
            isinstance(other, Code)
            and self.ring == other.ring
            and self.n == other.n
            and self.codewords == other.codewords
        )

    def __hash__(self):
        return hash((self.ring, self.n, self.codewords))

    def __len__(self):
        return len(self.codewords)

    def __contains__(self, v: Vector) -> bool:
        return v in self.codewords

    def __le__(self, other: "Code") -> bool:
        return self.codewords <= other.codewords

    def sorted_words(self) -> tuple[Vector, ...]:
        return tuple(sorted(self.codewords))

    def is_zero(self) -> bool:
        return len(self.codewords) == 1

    def factor(self, i: int) -> "Code":
        """The projection onto the i-th CRT factor, as a code over R_i."""
        ring = self.ring.factor_ring(i)
        words = frozenset(self.ring.project_vector(c, i) for c in self.codewords)
        return Code(ring, self.n, (), words)

    def scaled(self, r) -> "Code":
        words = frozenset(self.ring.vscale(r, c) for c in self.codewords)
        return Code(self.ring, self.n, (), words)


def span(ring: Pir, n: int, generators, cap: int = SPAN_CAP) -> Code:
    """The R-linear span of the given vectors in R^n."""
    generators = tuple(tuple(v) for v in generators)
    check_cap(ring.size**n, cap, f"materializing a code in {ring}^{n}")
    words = {ring.zero_vector(n)}
    for g in generators:
        if len(g) != n:
            raise ValueError(f"generator {g} does not have length {n}")
        words = {ring.vadd(w, ring.vscale(r, g)) for w in words for r in ring.elements()}
        check_cap(len(words), cap, "codeword materialization")
    return Code(ring, n, generators, frozenset(words))


def span_from_ints(ring: Pir, n: int, rows, cap: int = SPAN_CAP) -> Code:
    return span(ring, n, [ring.vector_from_ints(row) for row in rows], cap=cap)


def zero_code(ring: Pir, n: int) -> Code:
    return span(ring, n, [])


def full_space(ring: Pir, n: int, cap: int = SPAN_CAP) -> Code:
    gens = [ring.basis_vector(n, i) for i in range(n)]
    return span(ring, n, gens, cap=cap)


def cyclic_code(ring: Pir, v: Vector) -> Code:
    return span(ring, len(v), [v])


def code_sum(a: Code, b: Code) -> Code:
    ring = a.ring
    words = frozenset(ring.vadd(x, y) for x in a.codewords for y in b.codewords)
    return Code(ring, a.n, (), words)


def code_intersection(a: Code, b: Code) -> Code:
    return Code(a.ring, a.n, (), a.codewords & b.codewords)


# -- module invariants -----------------------------------------------------


def length_lambda(code: Code) -> int:
    """Composition length of the code as a module over its ring.

    Computed factor by factor from |C_i| = p_i^{lambda_i}; a non-integer
    logarithm signals that the input set is not a submodule.
    """
    total = 0
    for i, f in enumerate(code.ring.factors):
        size = len(code.factor(i))
        total += intlog(f.p, size)
    return total


def mu_factor(code: Code, i: int) -> int:
    """Least number of generators of the i-th factor of the code.

    Nakayama: mu(C_i) = log_p(|C_i| / |alpha_i C_i|).
    """
    f = code.ring.factors[i]
    ci = code.factor(i)
    alpha_ci = ci.scaled((f.p % f.size,))
    return intlog(f.p, len(ci) // len(alpha_ci))


def mu(code: Code) -> int:
    """Least number of generators of the code over the product ring."""
    return max(mu_factor(code, i) for i in range(code.ring.ell))


def big_m(code: Code) -> int:
    """M(C): the sum of mu over the CRT factors of the code."""
    return sum(mu_factor(code, i) for i in range(code.ring.ell))


# -- submodule enumeration ---------------------------------------------------


def enumerate_submodules(code: Code, cap: int = SUBMODULE_CAP) -> list[Code]:
    """All submodules of the code, in a deterministic order.

    Every submodule is a join of cyclic submodules, so closing the set of
    cyclic submodules under pairwise sums reaches all of them.  Codewords
    are re-indexed into the code itself so that sums are table lookups.
    """
    check_cap(len(code), cap, "submodule enumeration")
    ring = code.ring
    words = code.sorted_words()
    index = {w: i for i, w in enumerate(words)}
    m = len(words)
    add = np.empty((m, m), dtype=np.int32)
    for i, w in enumerate(words):
        for j, v in enumerate(words):
            add[i, j] = index[ring.vadd(w, v)]

    def multiples(i: int) -> frozenset[int]:
        return frozenset(index[ring.vscale(r, words[i])] for r in ring.elements())

    cyclics = {multiples(i) for i in range(m)}
    found = set(cyclics)
    frontier = set(cyclics)
    while frontier:
        new = set()
        for a in frontier:
            ia = sorted(a)
            for b in cyclics:
                s = frozenset(np.unique(add[np.ix_(ia, sorted(b))]).tolist())
                if s not in found:
                    new.add(s)
        found |= new
        frontier = new

    subs = sorted(found, key=lambda s: (len(s), sorted(s)))
    return [
        Code(ring, code.n, (), frozenset(words[i] for i in s)) for s in subs
    ]


def irredundant_generating_sizes(code: Code, max_size: int | None = None) -> set[int]:
    """Sizes of inclusion-minimal generating sets of the code.

    Desk-scale oracle used to probe which 'number of generators' values a
    submodule admits; the search is bounded by M(C), the largest possible
    irredundant size.
    """
    if code.is_zero():
        return {0}
    bound = big_m(code) if max_size is None else max_size
    nonzero = [w for w in code.sorted_words() if any(any(a) for a in w)]
    sizes = set()
    for size in range(1, bound + 1):
        for subset in itertools.combinations(nonzero, size):
            if len(span(code.ring, code.n, subset)) != len(code):
                continue
            if size == 1 or all(
                len(span(code.ring, code.n, subset[:i] + subset[i + 1 :]))
                != len(code)
                for i in range(size)
            ):
                sizes.add(size)
                break
    return sizes


# -- rectangular modules -----------------------------------------------------


def rectangular_closure(code: Code) -> tuple[Ideal, ...]:
    """The smallest rectangular module I_1 x ... x I_n containing the code:
    coordinate i carries the ideal generated by the i-th entries."""
    ring = code.ring
    return tuple(
        ring.ideal_generated_by([c[i] for c in code.codewords])
        for i in range(code.n)
    )


def rect_leq(ring: Pir, a: tuple[Ideal, ...], b: tuple[Ideal, ...]) -> bool:
    return all(ring.ideal_leq(x, y) for x, y in zip(a, b, strict=True))


def rect_sum(ring: Pir, a: tuple[Ideal, ...], b: tuple[Ideal, ...]) -> tuple[Ideal, ...]:
    return tuple(ring.ideal_sum(x, y) for x, y in zip(a, b, strict=True))


def rect_meet(ring: Pir, a: tuple[Ideal, ...], b: tuple[Ideal, ...]) -> tuple[Ideal, ...]:
    return tuple(ring.ideal_intersection(x, y) for x, y in zip(a, b, strict=True))


def rect_contains(ring: Pir, rect: tuple[Ideal, ...], v: Vector) -> bool:
    return all(ring.ideal_contains(I, a) for I, a in zip(rect, v, strict=True))


def rect_members(ring: Pir, rect: tuple[Ideal, ...]):
    return itertools.product(*(ring.ideal_members(I) for I in rect))


def rect_size(ring: Pir, rect: tuple[Ideal, ...]) -> int:
    return math.prod(ring.ideal_size(I) for I in rect)


def all_rectangular_modules(ring: Pir, n: int):
    return itertools.product(tuple(ring.all_ideals()), repeat=n)


def code_in_rect(code: Code, rect: tuple[Ideal, ...]) -> Code:
    """The intersection of the code with a rectangular module."""
    words = frozenset(
        c for c in code.codewords if rect_contains(code.ring, rect, c)
    )
    return Code(code.ring, code.n, (), words)
