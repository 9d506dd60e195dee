"""Latroids: a rank function and a length function on a finite modular
lattice, with values in Z^u (exact rationals admitted).

A triple (rho, len, L) must satisfy
  L1  rho(0) = len(0) = 0
  L2  len is strictly increasing
  L3  len is modular
  L4  0 <= rho(M) - rho(L) <= len(M) - len(L) whenever L < M
  L5  rho is submodular
Scalars are tuples under the product order, so comparisons may leave pairs
incomparable; the validators treat that explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotGradedError, ReconstructionError
from .lattices import (
    FiniteLattice,
    dual as dual_lattice,
    interval,
    is_complemented_lattice,
    is_modular_lattice,
    product as product_lattice,
)
from .report import Check, Report

Scalar = tuple  # length-u tuple of int or Fraction


def as_scalar(value, udim: int) -> Scalar:
    if isinstance(value, tuple):
        if len(value) != udim:
            raise ValueError(f"scalar {value} does not have {udim} coordinates")
        return value
    return (value,) * udim


def szero(udim: int) -> Scalar:
    return (0,) * udim


def sadd(a: Scalar, b: Scalar) -> Scalar:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def ssub(a: Scalar, b: Scalar) -> Scalar:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def sleq(a: Scalar, b: Scalar) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def slt(a: Scalar, b: Scalar) -> bool:
    return sleq(a, b) and a != b


@dataclass(frozen=True)
class Latroid:
    """Rank and length tables indexed by lattice element."""

    lattice: FiniteLattice
    rank: tuple[Scalar, ...]
    length: tuple[Scalar, ...]
    udim: int

    def __post_init__(self):
        n = self.lattice.size
        if len(self.rank) != n or len(self.length) != n:
            raise ValueError("rank/length tables must match the lattice size")

    @classmethod
    def from_functions(cls, lattice: FiniteLattice, rho, length, udim: int = 1) -> "Latroid":
        rank = tuple(as_scalar(rho(lab), udim) for lab in lattice.labels)
        leng = tuple(as_scalar(length(lab), udim) for lab in lattice.labels)
        return cls(lattice, rank, leng, udim)

    def rho(self, i: int) -> Scalar:
        return self.rank[i]

    def len_of(self, i: int) -> Scalar:
        return self.length[i]

    def top_rank(self) -> Scalar:
        return self.rank[self.lattice.top]

    def rho_of_label(self, label) -> Scalar:
        return self.rank[self.lattice.index[label]]

    def uses_height_length(self) -> bool:
        """True when the length function is the lattice height (udim 1)."""
        if self.udim != 1 or not self.lattice.is_graded:
            return False
        return all(
            self.length[i] == (self.lattice.hgt(i),) for i in range(self.lattice.size)
        )


def validate_latroid(lt: Latroid) -> Report:
    """Exhaustively check L1-L5; each check reports its first witness."""
    lat = lt.lattice
    zero = szero(lt.udim)
    checks = []

    ok = lt.rank[lat.bottom] == zero and lt.length[lat.bottom] == zero
    checks.append(
        Check("L1_zero_at_bottom", ok, "" if ok else
              f"rho(0)={lt.rank[lat.bottom]}, len(0)={lt.length[lat.bottom]}")
    )

    witness = None
    for a, b in lat.comparable_pairs():
        if not slt(lt.length[a], lt.length[b]):
            witness = f"len({lat.labels[a]})={lt.length[a]} !< len({lat.labels[b]})={lt.length[b]}"
            break
    checks.append(Check("L2_length_strictly_increasing", witness is None, witness or ""))

    witness = None
    for a, b in lat.pairs():
        lhs = sadd(lt.length[a], lt.length[b])
        rhs = sadd(lt.length[lat.join[a, b]], lt.length[lat.meet[a, b]])
        if lhs != rhs:
            witness = f"{lat.labels[a]}, {lat.labels[b]}"
            break
    checks.append(Check("L3_length_modular", witness is None, witness or ""))

    witness = None
    for a, b in lat.comparable_pairs():
        dr = ssub(lt.rank[b], lt.rank[a])
        dl = ssub(lt.length[b], lt.length[a])
        if not (sleq(zero, dr) and sleq(dr, dl)):
            witness = f"{lat.labels[a]} < {lat.labels[b]}: drho={dr}, dlen={dl}"
            break
    checks.append(Check("L4_rank_bounded_increasing", witness is None, witness or ""))

    witness = None
    for a, b in lat.pairs():
        lhs = sadd(lt.rank[a], lt.rank[b])
        rhs = sadd(lt.rank[lat.join[a, b]], lt.rank[lat.meet[a, b]])
        if not sleq(rhs, lhs):
            witness = f"{lat.labels[a]}, {lat.labels[b]}"
            break
    checks.append(Check("L5_rank_submodular", witness is None, witness or ""))

    return Report.from_checks(checks)


def _validated(lt: Latroid, validate: bool) -> Latroid:
    if validate:
        report = validate_latroid(lt)
        if not report.ok:
            raise ValueError(f"not a latroid: {report.summary()}")
    return lt


# -- constructors ----------------------------------------------------------


def free_latroid(lat: FiniteLattice, length=None, udim: int = 1, validate: bool = True) -> Latroid:
    """rho = len; defaults to the height function of a graded lattice."""
    if length is None:
        if not lat.is_graded:
            raise NotGradedError("free latroid needs a graded lattice or an explicit length")
        length = tuple((lat.hgt(i),) for i in range(lat.size))
        udim = 1
    else:
        length = tuple(as_scalar(length[i], udim) for i in range(lat.size))
    return _validated(Latroid(lat, length, length, udim), validate)


def uniform_latroid(lat: FiniteLattice, a, length=None, udim: int = 1,
                    validate: bool = True) -> Latroid:
    """rho(L) = len(L) capped at a > 0."""
    if length is None:
        if not lat.is_graded:
            raise NotGradedError("uniform latroid needs a graded lattice or an explicit length")
        length = tuple((lat.hgt(i),) for i in range(lat.size))
        udim = 1
    else:
        length = tuple(as_scalar(length[i], udim) for i in range(lat.size))
    a = as_scalar(a, udim)
    if not slt(szero(udim), a):
        raise ValueError(f"uniform cap must be positive, got {a}")
    rank = tuple(l if sleq(l, a) else a for l in length)
    return _validated(Latroid(lat, rank, length, udim), validate)


def restrict(lt: Latroid, a: int, b: int, validate: bool = True) -> Latroid:
    """The latroid on [a, b] with both functions shifted to vanish at a."""
    sub = interval(lt.lattice, a, b)
    idx = [lt.lattice.index[lab] for lab in sub.labels]
    rank = tuple(ssub(lt.rank[i], lt.rank[a]) for i in idx)
    length = tuple(ssub(lt.length[i], lt.length[a]) for i in idx)
    return _validated(Latroid(sub, rank, length, lt.udim), validate)


def direct_sum(lt1: Latroid, lt2: Latroid, validate: bool = True) -> Latroid:
    """Product lattice with coordinatewise sums of ranks and lengths."""
    if lt1.udim != lt2.udim:
        raise ValueError("direct summands must share the scalar dimension")
    lat = product_lattice(lt1.lattice, lt2.lattice)
    n2 = lt2.lattice.size
    rank = []
    length = []
    for i in range(lt1.lattice.size):
        for j in range(n2):
            rank.append(sadd(lt1.rank[i], lt2.rank[j]))
            length.append(sadd(lt1.length[i], lt2.length[j]))
    return _validated(Latroid(lat, tuple(rank), tuple(length), lt1.udim), validate)


def dual_latroid(lt: Latroid, validate: bool = True) -> Latroid:
    """Reverse the lattice; len*(L) = len(1) - len(L) and
    rho*(L) = len*(L) - rho(1) + rho(L)."""
    lat = dual_lattice(lt.lattice)
    top_len = lt.length[lt.lattice.top]
    top_rank = lt.rank[lt.lattice.top]
    length = tuple(ssub(top_len, l) for l in lt.length)
    rank = tuple(
        sadd(ssub(length[i], top_rank), lt.rank[i]) for i in range(lat.size)
    )
    return _validated(Latroid(lat, rank, length, lt.udim), validate)


def scale_latroid(lt: Latroid, c: int, validate: bool = True) -> Latroid:
    """Multiply rank and length by a positive integer."""
    if c <= 0:
        raise ValueError("scale factor must be positive")
    rank = tuple(tuple(c * x for x in s) for s in lt.rank)
    length = tuple(tuple(c * x for x in s) for s in lt.length)
    return _validated(Latroid(lt.lattice, rank, length, lt.udim), validate)


def collapse_scalars(lt: Latroid, validate: bool = True) -> Latroid:
    """Sum the scalar coordinates, giving a udim-1 latroid."""
    rank = tuple((sum(s),) for s in lt.rank)
    length = tuple((sum(s),) for s in lt.length)
    return _validated(Latroid(lt.lattice, rank, length, 1), validate)


# -- independents / bases / circuits ------------------------------------------


def independents(lt: Latroid) -> tuple[int, ...]:
    """Elements with rho(L) = len(L)."""
    return tuple(i for i in range(lt.lattice.size) if lt.rank[i] == lt.length[i])


def bases(lt: Latroid) -> tuple[int, ...]:
    """Independent elements whose length equals the top rank."""
    top_rank = lt.top_rank()
    return tuple(i for i in independents(lt) if lt.length[i] == top_rank)


def circuits(lt: Latroid) -> tuple[int, ...]:
    """Dependent elements all of whose proper predecessors are independent."""
    lat = lt.lattice
    indep = set(independents(lt))
    out = []
    for i in range(lat.size):
        if i in indep:
            continue
        if all(j in indep for j in range(lat.size) if lat.lt(j, i)):
            out.append(i)
    return tuple(out)


def _require_crypto_hypotheses(lat: FiniteLattice) -> None:
    if not lat.is_graded:
        raise NotGradedError("cryptomorphisms need a graded lattice")
    if not (is_complemented_lattice(lat) and is_modular_lattice(lat)):
        raise ValueError("cryptomorphisms need a complemented modular lattice")


def _maximal_in(lat: FiniteLattice, subset, below: int) -> list[int]:
    """Maximal members of ``subset`` dominated by ``below``."""
    inside = [i for i in subset if lat.leq[i, below]]
    return [i for i in inside if not any(lat.lt(i, j) for j in inside)]


def _atom_decompositions(lat: FiniteLattice, x: int):
    """All hgt(x)-subsets of atoms below x whose join is x."""
    below = [a for a in lat.atoms if lat.leq[a, x]]
    h = lat.hgt(x)
    if h == 0:
        yield ()
        return
    for combo in itertools.combinations(below, h):
        j = lat.bottom
        for a in combo:
            j = int(lat.join[j, a])
        if j == x:
            yield combo


def axioms_I(lat: FiniteLattice, indep) -> Report:
    """Independence axioms for a candidate set on a complemented modular
    graded lattice (height as length)."""
    _require_crypto_hypotheses(lat)
    I = set(indep)
    checks = []

    checks.append(Check("I1_bottom", lat.bottom in I,
                        "" if lat.bottom in I else "bottom not independent"))

    witness = None
    for i in I:
        for j in range(lat.size):
            if lat.lt(j, i) and j not in I:
                witness = f"{lat.labels[j]} < {lat.labels[i]}"
                break
        if witness:
            break
    checks.append(Check("I2_downward_closed", witness is None, witness or ""))

    witness = None
    for i1 in I:
        for i2 in I:
            if lat.hgt(i2) >= lat.hgt(i1):
                continue
            if not any(
                lat.leq[a, i1] and not lat.leq[a, i2] and int(lat.join[i2, a]) in I
                for a in lat.atoms
            ):
                witness = f"I1={lat.labels[i1]}, I2={lat.labels[i2]}"
                break
        if witness:
            break
    checks.append(Check("I3_augmentation", witness is None, witness or ""))

    witness = None
    max_below = {l: _maximal_in(lat, I, l) for l in range(lat.size)}
    for l1, l2 in lat.pairs():
        j12 = int(lat.join[l1, l2])
        for i1 in max_below[l1]:
            for i2 in max_below[l2]:
                jii = int(lat.join[i1, i2])
                if not any(lat.leq[i3, jii] for i3 in max_below[j12]):
                    witness = (
                        f"L1={lat.labels[l1]}, L2={lat.labels[l2]}, "
                        f"I1={lat.labels[i1]}, I2={lat.labels[i2]}"
                    )
                    break
            if witness:
                break
        if witness:
            break
    checks.append(Check("I4_join_compatible_maxima", witness is None, witness or ""))

    return Report.from_checks(checks)


def axioms_B(lat: FiniteLattice, base_set) -> Report:
    """Basis axioms for a candidate set."""
    _require_crypto_hypotheses(lat)
    B = sorted(set(base_set))
    checks = [Check("B1_nonempty", bool(B), "" if B else "empty basis set")]

    witness = None
    decomps = {b: list(_atom_decompositions(lat, b)) for b in B}
    for b1 in B:
        for b2 in B:
            for js in decomps[b1]:
                for ts in decomps[b2]:
                    for pos, ji in enumerate(js):
                        if lat.leq[ji, b2]:
                            continue
                        rest = js[:pos] + js[pos + 1 :]
                        jrest = lat.bottom
                        for a in rest:
                            jrest = int(lat.join[jrest, a])
                        if not any(
                            not lat.leq[t, b1] and int(lat.join[jrest, t]) in B
                            for t in ts
                        ):
                            witness = (
                                f"B1={lat.labels[b1]}, B2={lat.labels[b2]}, "
                                f"atom={lat.labels[ji]}"
                            )
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    checks.append(Check("B2_atom_exchange", witness is None, witness or ""))

    witness = None
    meets = {l: [int(lat.meet[b, l]) for b in B] for l in range(lat.size)}

    def maximal_meets(l):
        ms = meets[l]
        return [
            (b, m) for b, m in zip(B, ms) if not any(lat.lt(m, m2) for m2 in ms)
        ]

    max_meets = {l: maximal_meets(l) for l in range(lat.size)}
    for l1, l2 in lat.pairs():
        j12 = int(lat.join[l1, l2])
        for b1, m1 in max_meets[l1]:
            for b2, m2 in max_meets[l2]:
                target = int(lat.join[m1, m2])
                if not any(
                    lat.leq[m3, target] for _, m3 in max_meets[j12]
                ):
                    witness = f"L1={lat.labels[l1]}, L2={lat.labels[l2]}"
                    break
            if witness:
                break
        if witness:
            break
    checks.append(Check("B3_join_compatible_meets", witness is None, witness or ""))

    return Report.from_checks(checks)


def axioms_C(lat: FiniteLattice, circuit_set) -> Report:
    """Circuit axioms for a candidate set."""
    _require_crypto_hypotheses(lat)
    C = sorted(set(circuit_set))
    checks = [
        Check("C1_no_bottom", lat.bottom not in C,
              "" if lat.bottom not in C else "bottom is a circuit")
    ]

    witness = None
    for c1 in C:
        for c2 in C:
            if c1 != c2 and lat.leq[c1, c2]:
                witness = f"{lat.labels[c1]} < {lat.labels[c2]}"
                break
        if witness:
            break
    checks.append(Check("C2_antichain", witness is None, witness or ""))

    witness = None
    for c1 in C:
        for c2 in C:
            if c2 <= c1:
                continue
            j = int(lat.join[c1, c2])
            for l in range(lat.size):
                if lat.leq[l, j] and lat.hgt(l) == lat.hgt(j) - 1:
                    if not any(lat.leq[c3, l] for c3 in C):
                        witness = (
                            f"C1={lat.labels[c1]}, C2={lat.labels[c2]}, "
                            f"L={lat.labels[l]}"
                        )
                        break
            if witness:
                break
        if witness:
            break
    checks.append(Check("C3_elimination", witness is None, witness or ""))

    return Report.from_checks(checks)


# -- rank reconstructions ------------------------------------------------------


def rank_from_independents(lat: FiniteLattice, indep, validate: bool = True) -> Latroid:
    """rho(L) = hgt(I) for I maximal independent below L."""
    _require_crypto_hypotheses(lat)
    I = set(indep)
    report = axioms_I(lat, I)
    if not report.ok:
        raise ReconstructionError(f"independent axioms fail: {report.summary()}")
    rank = []
    for l in range(lat.size):
        maxima = _maximal_in(lat, I, l)
        heights = {lat.hgt(i) for i in maxima}
        if len(heights) != 1:
            raise ReconstructionError(
                f"maximal independents below {lat.labels[l]} have heights {sorted(heights)}"
            )
        rank.append((heights.pop(),))
    length = tuple((lat.hgt(i),) for i in range(lat.size))
    return _validated(Latroid(lat, tuple(rank), length, 1), validate)


def rank_from_bases(lat: FiniteLattice, base_set, validate: bool = True) -> Latroid:
    """rho(L) = hgt(L ^ B) for B with maximal intersection with L."""
    _require_crypto_hypotheses(lat)
    B = sorted(set(base_set))
    report = axioms_B(lat, B)
    if not report.ok:
        raise ReconstructionError(f"basis axioms fail: {report.summary()}")
    rank = []
    for l in range(lat.size):
        ms = [int(lat.meet[b, l]) for b in B]
        maxima = [m for m in ms if not any(lat.lt(m, m2) for m2 in ms)]
        heights = {lat.hgt(m) for m in maxima}
        if len(heights) != 1:
            raise ReconstructionError(
                f"maximal basis meets below {lat.labels[l]} have heights {sorted(heights)}"
            )
        rank.append((heights.pop(),))
    length = tuple((lat.hgt(i),) for i in range(lat.size))
    return _validated(Latroid(lat, tuple(rank), length, 1), validate)


def circuit_chain_length(lat: FiniteLattice, circuit_set, l: int) -> int:
    """kappa(L): the length of a maximal chain of circuits dominated by L.

    A chain is a sequence of circuits whose partial joins strictly increase;
    maximal chains all have the same length, and a longest chain is maximal,
    so the value is the longest-chain length over all extension orders
    (memoized on the join reached so far).  Greedily extending until stuck
    does NOT suffice: a stuck chain may still be refinable in the middle.
    """
    inside = [c for c in circuit_set if lat.leq[c, l]]
    memo: dict[int, int] = {}

    def longest(j: int) -> int:
        if j in memo:
            return memo[j]
        best = 0
        for c in inside:
            if not lat.leq[c, j]:
                best = max(best, 1 + longest(int(lat.join[j, c])))
        memo[j] = best
        return best

    return longest(lat.bottom)


def rank_from_circuits(lat: FiniteLattice, circuit_set, validate: bool = True) -> Latroid:
    """rho = hgt - kappa for the maximal circuit-chain length kappa."""
    _require_crypto_hypotheses(lat)
    C = sorted(set(circuit_set))
    report = axioms_C(lat, C)
    if not report.ok:
        raise ReconstructionError(f"circuit axioms fail: {report.summary()}")
    rank = tuple(
        (lat.hgt(l) - circuit_chain_length(lat, C, l),) for l in range(lat.size)
    )
    length = tuple((lat.hgt(i),) for i in range(lat.size))
    return _validated(Latroid(lat, rank, length, 1), validate)


# -- closure, flats, hyperplanes ----------------------------------------------


def closure(lt: Latroid, l: int) -> int:
    """cl(L): the join of everything whose join with L keeps the rank."""
    lat = lt.lattice
    out = lat.bottom
    for x in range(lat.size):
        if lt.rank[int(lat.join[l, x])] == lt.rank[l]:
            out = int(lat.join[out, x])
    if not lat.leq[l, out]:
        raise AssertionError("closure must dominate its argument")
    return out


def flats(lt: Latroid) -> tuple[int, ...]:
    return tuple(l for l in range(lt.lattice.size) if closure(lt, l) == l)


def hyperplanes(lt: Latroid) -> tuple[int, ...]:
    """Flats of rank exactly one below the top rank (udim 1)."""
    if lt.udim != 1:
        raise ValueError("hyperplanes need a totally ordered scalar (udim 1)")
    want = lt.top_rank()[0] - 1
    return tuple(l for l in flats(lt) if lt.rank[l][0] == want)


# -- generalized weights --------------------------------------------------------


def generalized_weight(lt: Latroid, a) -> int:
    """d_a: the least len(L) with len(L) - rho(L) >= a; 0 when nothing
    qualifies.  Only for udim 1, where min is unambiguous."""
    if lt.udim != 1:
        raise ValueError(
            "generalized_weight needs a totally ordered scalar; "
            "use minimal_feasible_lengths for udim > 1"
        )
    a = as_scalar(a, 1)
    feasible = [
        lt.length[l][0]
        for l in range(lt.lattice.size)
        if sleq(a, ssub(lt.length[l], lt.rank[l]))
    ]
    return min(feasible) if feasible else 0


def minimal_feasible_lengths(lt: Latroid, a) -> tuple[Scalar, ...]:
    """The antichain of minimal len(L) values with len(L) - rho(L) >= a."""
    a = as_scalar(a, lt.udim)
    feasible = {
        lt.length[l]
        for l in range(lt.lattice.size)
        if sleq(a, ssub(lt.length[l], lt.rank[l]))
    }
    return tuple(
        sorted(s for s in feasible if not any(slt(t, s) for t in feasible))
    )
