"""Finite chain rings Z_{p^k} and finite principal ideal rings given as
CRT products of chain rings.

Elements of a product ring are tuples of residues, one per factor, with
coordinate i reduced modulo p_i^{k_i}.  Vectors are tuples of elements.
All arithmetic is exact.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .limits import SPAN_CAP, VECTOR_ENUM_CAP, check_cap

Element = tuple[int, ...]
Vector = tuple[Element, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def intlog(base: int, n: int) -> int:
    """The exact integer t with base**t == n; raises if there is none."""
    if n < 1:
        raise ValueError(f"{n} is not a power of {base}")
    t = 0
    while n > 1:
        if n % base:
            raise ValueError(f"{n} is not a power of {base}")
        n //= base
        t += 1
    return t


@dataclass(frozen=True)
class ChainRing:
    """The chain ring Z_{p^k}: maximal ideal (p), residue field of size p."""

    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.k < 1:
            raise ValueError(f"k = {self.k} must be >= 1")

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def residue_field_size(self) -> int:
        return self.p

    def valuation(self, r: int) -> int:
        """The unique t with r = unit * p^t; by convention valuation(0) = k."""
        r %= self.size
        if r == 0:
            return self.k
        t = 0
        while r % self.p == 0:
            r //= self.p
            t += 1
        return t

    def is_unit(self, r: int) -> bool:
        return r % self.p != 0

    def __str__(self):
        return f"Z_{self.size}" if self.k == 1 or self.p**self.k < 10 else f"Z_{{{self.p}^{self.k}}}"


@dataclass(frozen=True)
class Ideal:
    """The ideal (p_1^{e_1}) x ... x (p_l^{e_l}) of a product ring."""

    exponents: tuple[int, ...]


@dataclass(frozen=True)
class Pir:
    """A finite principal ideal ring R_1 x ... x R_l of chain rings."""

    factors: tuple[ChainRing, ...]

    def __post_init__(self):
        if len(self.factors) < 1:
            raise ValueError("a product ring needs at least one factor")

    # -- basic structure ---------------------------------------------------

    @property
    def ell(self) -> int:
        return len(self.factors)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(f.size for f in self.factors)

    @property
    def size(self) -> int:
        return math.prod(self.sizes)

    @property
    def is_chain_ring(self) -> bool:
        return self.ell == 1

    @property
    def zero(self) -> Element:
        return (0,) * self.ell

    @property
    def one(self) -> Element:
        return (1,) * self.ell

    def check_element(self, a: Element) -> None:
        if len(a) != self.ell:
            raise ValueError(f"element {a} has {len(a)} coordinates, ring has {self.ell}")

    def elements(self):
        """All ring elements in lexicographic residue order."""
        return itertools.product(*(range(s) for s in self.sizes))

    def coprime_sizes(self) -> bool:
        return all(
            math.gcd(a, b) == 1 for a, b in itertools.combinations(self.sizes, 2)
        )

    def from_int(self, x: int) -> Element:
        """Reduce an integer mod every factor; a CRT bijection iff the
        factor sizes are pairwise coprime."""
        return tuple(x % s for s in self.sizes)

    def to_int(self, a: Element) -> int:
        """CRT reconstruction; requires pairwise coprime factor sizes."""
        if not self.coprime_sizes():
            raise ValueError("integer encoding needs pairwise coprime factor sizes")
        n = self.size
        x = 0
        for ai, s in zip(a, self.sizes):
            m = n // s
            x += ai * m * pow(m, -1, s)
        return x % n

    # -- element arithmetic ------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        self.check_element(a)
        self.check_element(b)
        return tuple((x + y) % s for x, y, s in zip(a, b, self.sizes))

    def neg(self, a: Element) -> Element:
        self.check_element(a)
        return tuple((-x) % s for x, s in zip(a, self.sizes))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        self.check_element(a)
        self.check_element(b)
        return tuple((x * y) % s for x, y, s in zip(a, b, self.sizes))

    def is_unit(self, a: Element) -> bool:
        self.check_element(a)
        return all(f.is_unit(x) for f, x in zip(self.factors, a))

    def units(self):
        return (a for a in self.elements() if self.is_unit(a))

    def valuations(self, a: Element) -> tuple[int, ...]:
        self.check_element(a)
        return tuple(f.valuation(x) for f, x in zip(self.factors, a))

    def factor_ring(self, i: int) -> "Pir":
        return Pir((self.factors[i],))

    # -- vectors -----------------------------------------------------------

    def zero_vector(self, n: int) -> Vector:
        return (self.zero,) * n

    def basis_vector(self, n: int, i: int) -> Vector:
        return tuple(self.one if j == i else self.zero for j in range(n))

    def vadd(self, v: Vector, w: Vector) -> Vector:
        return tuple(self.add(a, b) for a, b in zip(v, w, strict=True))

    def vneg(self, v: Vector) -> Vector:
        return tuple(self.neg(a) for a in v)

    def vscale(self, r: Element, v: Vector) -> Vector:
        return tuple(self.mul(r, a) for a in v)

    def vector_from_ints(self, entries) -> Vector:
        return tuple(self.from_int(int(x)) for x in entries)

    def vectors(self, n: int, cap: int = VECTOR_ENUM_CAP):
        """All of R^n in lexicographic order; capped."""
        check_cap(self.size**n, cap, f"enumerating {self}^{n}")
        return itertools.product(self.elements(), repeat=n)

    def project_vector(self, v: Vector, i: int) -> Vector:
        """Image of v under the projection onto the i-th factor, as a
        vector over the one-factor ring."""
        return tuple((a[i],) for a in v)

    def embed_vector(self, w: Vector, i: int, n: int) -> Vector:
        """Embed a vector over factor i into R^n (zeros in other factors)."""
        out = []
        for a in w:
            coords = [0] * self.ell
            coords[i] = a[0]
            out.append(tuple(coords))
        return tuple(out)

    # -- ideals ------------------------------------------------------------

    def check_ideal(self, I: Ideal) -> None:
        if len(I.exponents) != self.ell:
            raise ValueError(f"ideal {I} does not fit a ring with {self.ell} factors")
        for e, f in zip(I.exponents, self.factors):
            if not 0 <= e <= f.k:
                raise ValueError(f"ideal exponent {e} outside [0, {f.k}]")

    @property
    def unit_ideal(self) -> Ideal:
        return Ideal((0,) * self.ell)

    @property
    def zero_ideal(self) -> Ideal:
        return Ideal(tuple(f.k for f in self.factors))

    def all_ideals(self):
        return (
            Ideal(es)
            for es in itertools.product(*(range(f.k + 1) for f in self.factors))
        )

    def ideal_contains(self, I: Ideal, a: Element) -> bool:
        return all(v >= e for v, e in zip(self.valuations(a), I.exponents))

    def ideal_leq(self, I: Ideal, J: Ideal) -> bool:
        """Containment I <= J as subsets."""
        return all(e >= f for e, f in zip(I.exponents, J.exponents))

    def ideal_sum(self, I: Ideal, J: Ideal) -> Ideal:
        return Ideal(tuple(min(e, f) for e, f in zip(I.exponents, J.exponents)))

    def ideal_intersection(self, I: Ideal, J: Ideal) -> Ideal:
        return Ideal(tuple(max(e, f) for e, f in zip(I.exponents, J.exponents)))

    def ideal_size(self, I: Ideal) -> int:
        return math.prod(f.p ** (f.k - e) for f, e in zip(self.factors, I.exponents))

    def ideal_members(self, I: Ideal):
        per_factor = []
        for f, e in zip(self.factors, I.exponents):
            g = f.p**e
            per_factor.append(tuple(range(0, f.size, g)) if e < f.k else (0,))
        return itertools.product(*per_factor)

    def ideal_generated_by(self, elements) -> Ideal:
        """Smallest ideal containing the given ring elements."""
        exps = [f.k for f in self.factors]
        for a in elements:
            for i, v in enumerate(self.valuations(a)):
                exps[i] = min(exps[i], v)
        return Ideal(tuple(exps))

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)


def chain_ring(p: int, k: int) -> Pir:
    return Pir((ChainRing(p, k),))


def product_ring(*pk_pairs) -> Pir:
    return Pir(tuple(ChainRing(p, k) for p, k in pk_pairs))


_FACTOR_RE = re.compile(r"^Z_?\{?(\d+)(?:\^(\d+))?\}?$")


def parse_ring(text: str) -> Pir:
    """Parse 'Z_{p^k}' or a product 'Z_{p1^k1} x Z_{p2^k2} x ...'.

    Single factors may be written as Z_N for a prime power N (Z_8 means
    Z_{2^3}).  Products must be given in factored form; Z_6 is rejected
    because no factorization is attempted.
    """
    factors = []
    for part in text.split("x"):
        part = part.strip()
        m = _FACTOR_RE.match(part)
        if not m:
            raise ValueError(f"cannot parse ring factor {part!r}")
        base = int(m.group(1))
        if m.group(2) is not None:
            p, k = base, int(m.group(2))
        else:
            if base < 2:
                raise ValueError(f"ring factor {part!r} must have size >= 2")
            p = next(d for d in range(2, base + 1) if base % d == 0)
            try:
                k = intlog(p, base)
            except ValueError:
                raise ValueError(
                    f"{part!r} is not a prime power; write the ring as a "
                    "product of chain rings, e.g. 'Z_2 x Z_3'"
                ) from None
        factors.append(ChainRing(p, k))
    return Pir(tuple(factors))
