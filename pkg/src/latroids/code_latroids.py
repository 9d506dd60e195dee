"""Latroids attached to codes: submodule-lattice latroids, chain-support
latroids on grids, rectangular-support latroids, block matroids, rank-metric
and sum-rank latroids, and the generalized weights of codes with
brute-force submodule oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .codes import (
    Code,
    big_m,
    code_in_rect,
    enumerate_submodules,
    full_space,
    length_lambda,
    rect_meet,
    rectangular_closure,
    span,
)
from .core import Latroid, _validated, generalized_weight
from .lattices import (
    FiniteLattice,
    boolean_lattice,
    chain_support_lattice,
    product as product_lattice,
    rectangular_lattice,
    submodule_lattice,
    subspace_lattice,
)
from .limits import SPAN_CAP, check_cap
from .report import Check, Report
from .rings import Pir, intlog
from .supports import ChainSupport, Support, rect_support, validate_modular


# -- latroids on submodule lattices ------------------------------------------


def latroid_from_code(code: Code, length_fn=length_lambda,
                      lattice: FiniteLattice | None = None,
                      validate: bool = True) -> Latroid:
    """rho(M) = len(M) - len(M n C) on a lattice of submodules of R^n.

    ``length_fn`` maps a Code to an integer and must be strictly increasing
    and modular on the lattice (checked via the free latroid axioms).
    """
    if lattice is None:
        lattice = submodule_lattice(full_space(code.ring, code.n))
    length = {m: length_fn(m) for m in lattice.labels}
    base = Latroid.from_functions(lattice, lambda m: length[m], lambda m: length[m])
    from .core import validate_latroid

    base_report = validate_latroid(base)
    if not base_report.ok:
        raise ValueError(f"length functional unusable: {base_report.summary()}")

    def rho(m: Code):
        inside = Code(code.ring, code.n, (), m.codewords & code.codewords)
        return length[m] - length_fn(inside)

    lt = Latroid.from_functions(lattice, rho, lambda m: length[m])
    return _validated(lt, validate)


# -- chain-support latroids ----------------------------------------------------


def chain_support_latroid(code: Code, validate: bool = True) -> Latroid:
    """The latroid on the grid of rectangular support vectors.

    For a chain ring, rho(s) = |s| - lambda(M_s n C) where M_s is the
    rectangular module with support s.  Over a product ring the scalar is
    the tuple of per-factor values, one coordinate per CRT factor.
    """
    ring = code.ring
    supp = ChainSupport(ring, code.n)
    lattice = chain_support_lattice(ring, code.n)
    ell = ring.ell
    ks = [f.k for f in ring.factors]

    words_by_grid = {}
    for label in lattice.labels:
        inside = [c for c in code.codewords if _vleq(supp(c), label)]
        words_by_grid[label] = inside

    def factor_block(label, j):
        return label[j::ell]

    def rho(label):
        sub = Code(ring, code.n, (), frozenset(words_by_grid[label]))
        out = []
        for j in range(ell):
            block = factor_block(label, j)
            lam = intlog(ring.factors[j].p, len(sub.factor(j)))
            out.append(sum(block) - lam)
        return tuple(out)

    def length(label):
        return tuple(sum(factor_block(label, j)) for j in range(ell))

    lt = Latroid.from_functions(lattice, rho, length, udim=ell)
    return _validated(lt, validate)


def _vleq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


# -- rectangular-support latroids ------------------------------------------------


def rect_supp_latroid(code: Code, supp: Support, validate: bool = True) -> Latroid:
    """rho(M) = supp(M) - supp(M ^ K) on the lattice of rectangular modules,
    where K is the rectangular closure of the code.

    M ^ K is the lattice meet with the closure; taking instead the smallest
    rectangular module containing M n C breaks monotonicity and is not a
    latroid, so the meet form is the one implemented.
    """
    ring = code.ring
    if not supp.is_standard:
        raise ValueError("rectangular-support latroids need a standard support")
    if not validate_modular(supp).ok:
        raise ValueError("rectangular-support latroids need a modular support")
    lattice = rectangular_lattice(ring, code.n)
    closure = rectangular_closure(code)
    supp_of = {m: rect_support(supp, m) for m in lattice.labels}

    def rho(m):
        inter = rect_meet(ring, m, closure)
        return tuple(
            x - y for x, y in zip(supp_of[m], rect_support(supp, inter))
        )

    lt = Latroid.from_functions(
        lattice, rho, lambda m: supp_of[m], udim=supp.u
    )
    return _validated(lt, validate)


# -- block matroids ---------------------------------------------------------------


def _require_field(ring: Pir) -> int:
    if ring.ell != 1 or ring.factors[0].k != 1:
        raise ValueError(f"{ring} is not a field")
    return ring.factors[0].p


def block_matroid(code: Code, validate: bool = True) -> Latroid:
    """The classical matroid of a block code over a field, as a latroid on
    the boolean lattice: rho(S) = |S| - dim{c : supp(c) in S}."""
    q = _require_field(code.ring)
    lattice = boolean_lattice(code.n)

    def subcode_dim(s: frozenset) -> int:
        words = [
            c for c in code.codewords
            if all(i in s for i in range(code.n) if c[i] != code.ring.zero)
        ]
        return intlog(q, len(words))

    lt = Latroid.from_functions(
        lattice, lambda s: len(s) - subcode_dim(s), lambda s: len(s)
    )
    return _validated(lt, validate)


# -- matrix codes ------------------------------------------------------------------


Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MatrixCode:
    """An F_q-linear code of block matrix tuples.

    ``blocks`` lists the (rows, cols) shape of each block; codewords are
    tuples of matrices, one per block.  A single-block instance models an
    ordinary rank-metric code in F_q^{m x n}.
    """

    q: int
    blocks: tuple[tuple[int, int], ...]
    codewords: frozenset[tuple[Matrix, ...]]

    def __len__(self):
        return len(self.codewords)

    @property
    def ell(self) -> int:
        return len(self.blocks)

    @property
    def shape(self) -> tuple[int, int]:
        if self.ell != 1:
            raise ValueError("shape is for single-block codes")
        return self.blocks[0]

    def dim(self) -> int:
        return intlog(self.q, len(self.codewords))

    def transposed(self) -> "MatrixCode":
        blocks = tuple((n, m) for m, n in self.blocks)
        words = frozenset(
            tuple(tuple(zip(*mat)) for mat in word) for word in self.codewords
        )
        return MatrixCode(self.q, blocks, words)


def matrix_code(q: int, blocks, generators, cap: int = SPAN_CAP) -> MatrixCode:
    """The F_q-span of generator words (tuples of block matrices)."""
    blocks = tuple((int(m), int(n)) for m, n in blocks)
    gens = []
    for word in generators:
        word = tuple(tuple(tuple(int(x) % q for x in row) for row in mat) for mat in word)
        for mat, (m, n) in zip(word, blocks, strict=True):
            if len(mat) != m or any(len(r) != n for r in mat):
                raise ValueError(f"block {mat} does not have shape {m}x{n}")
        gens.append(word)
    check_cap(q ** len(gens), cap, "matrix code span")

    def scale_word(c, word):
        return tuple(
            tuple(tuple((c * x) % q for x in row) for row in mat) for mat in word
        )

    def add_words(a, b):
        return tuple(
            tuple(
                tuple((x + y) % q for x, y in zip(ra, rb))
                for ra, rb in zip(ma, mb)
            )
            for ma, mb in zip(a, b)
        )

    zero = tuple(
        tuple(tuple(0 for _ in range(n)) for _ in range(m)) for m, n in blocks
    )
    words = {zero}
    for g in gens:
        words = {add_words(w, scale_word(c, g)) for w in words for c in range(q)}
    return MatrixCode(q, blocks, frozenset(words))


def single_matrix_code(q: int, m: int, n: int, generators, cap: int = SPAN_CAP) -> MatrixCode:
    return matrix_code(q, [(m, n)], [(g,) for g in generators], cap=cap)


def product_matrix_code(*factors: MatrixCode) -> MatrixCode:
    """The direct product of matrix codes, one block group per factor."""
    q = factors[0].q
    if any(f.q != q for f in factors):
        raise ValueError("factors must share the field")
    blocks = tuple(b for f in factors for b in f.blocks)
    words = frozenset(
        tuple(itertools.chain.from_iterable(ws))
        for ws in itertools.product(*(f.codewords for f in factors))
    )
    return MatrixCode(q, blocks, words)


def _rows_in_subspace(mat: Matrix, basis, q: int) -> bool:
    return all(linalg.in_span(basis, row, q) for row in mat)


def _cols_in_subspace(mat: Matrix, basis, q: int) -> bool:
    return all(linalg.in_span(basis, col, q) for col in zip(*mat))


# -- rank-metric latroids ------------------------------------------------------------


def rank_metric_latroid(mc: MatrixCode, validate: bool = True, cap: int = 256) -> Latroid:
    """rho(V) = m dim(V) - dim{c : rowspace(c) in V} on the subspace
    lattice of F_q^n."""
    m, n = mc.shape
    lattice = subspace_lattice(mc.q, n, cap=cap)

    def subcode_dim(basis) -> int:
        words = [c for c in mc.codewords if _rows_in_subspace(c[0], basis, mc.q)]
        return intlog(mc.q, len(words))

    lt = Latroid.from_functions(
        lattice,
        lambda b: m * len(b) - subcode_dim(b),
        lambda b: m * len(b),
    )
    return _validated(lt, validate)


def tilde_polymatroid(mc: MatrixCode, validate: bool = True, cap: int = 256) -> Latroid:
    """The rational-rank variant rho(V) = (dim C - dim C(V*)) / m with
    dim as length; a q-polymatroid presented as a latroid."""
    m, n = mc.shape
    lattice = subspace_lattice(mc.q, n, cap=cap)
    dim_c = mc.dim()

    def subcode_dim(basis) -> int:
        words = [c for c in mc.codewords if _rows_in_subspace(c[0], basis, mc.q)]
        return intlog(mc.q, len(words))

    def rho(basis):
        perp = linalg.orthogonal_complement(basis, mc.q, n)
        return Fraction(dim_c - subcode_dim(perp), m)

    lt = Latroid.from_functions(lattice, rho, lambda b: len(b))
    return _validated(lt, validate)


def qpolymatroid_axioms(lt: Latroid) -> Report:
    """P1: 0 <= rho <= dim, P2: monotone, P3: submodular, with the latroid's
    length playing the dimension."""
    lat = lt.lattice
    p1 = next(
        (
            f"rho({lat.labels[i]}) = {lt.rank[i]}"
            for i in range(lat.size)
            if not (0 <= lt.rank[i][0] and lt.rank[i][0] <= lt.length[i][0])
        ),
        None,
    )
    p2 = next(
        (
            f"{lat.labels[a]} <= {lat.labels[b]}"
            for a, b in lat.comparable_pairs()
            if lt.rank[a][0] > lt.rank[b][0]
        ),
        None,
    )
    p3 = next(
        (
            f"{lat.labels[a]}, {lat.labels[b]}"
            for a, b in lat.pairs()
            if lt.rank[lat.join[a, b]][0] + lt.rank[lat.meet[a, b]][0]
            > lt.rank[a][0] + lt.rank[b][0]
        ),
        None,
    )
    return Report.from_checks(
        [
            Check("P1_bounded_by_dim", p1 is None, p1 or ""),
            Check("P2_monotone", p2 is None, p2 or ""),
            Check("P3_submodular", p3 is None, p3 or ""),
        ]
    )


def tilde_relation_check(mc: MatrixCode, cap: int = 256) -> Report:
    """The two rank-metric latroids carry the same information:
    tilde_rho(V) = (rho(V*) - m dim(V*) + dim C) / m for every V."""
    m, n = mc.shape
    plain = rank_metric_latroid(mc, validate=False, cap=cap)
    tilde = tilde_polymatroid(mc, validate=False, cap=cap)
    lat = plain.lattice
    witness = None
    for i, basis in enumerate(lat.labels):
        perp = linalg.orthogonal_complement(basis, mc.q, n)
        j = lat.index[perp]
        expected = Fraction(
            plain.rank[j][0] - m * len(perp) + mc.dim(), m
        )
        if tilde.rank[i][0] != expected:
            witness = f"V = {basis}"
            break
    return Report.from_checks(
        [Check("tilde_rank_relation", witness is None, witness or "")]
    )


# -- sum-rank latroids ------------------------------------------------------------


def sum_rank_latroid(mc: MatrixCode, spaces: str = "column",
                     validate: bool = True, cap: int = 256) -> Latroid:
    """The latroid of a sum-rank code on a product of subspace lattices.

    ``spaces="column"`` constrains block column spaces, so the i-th lattice
    factor consists of subspaces of F_q^{m_i} and the length of (V_i)_i is
    sum m_i dim(V_i); this matches the written definition but is a latroid
    only when m_i >= n_i for every block (enforced).  ``spaces="row"``
    constrains row spaces inside F_q^{n_i} with the same length formula and
    is a latroid for every shape; with one block it coincides with
    rank_metric_latroid.
    """
    if spaces not in ("column", "row"):
        raise ValueError("spaces must be 'column' or 'row'")
    if spaces == "column" and any(m < n for m, n in mc.blocks):
        raise ValueError(
            "column-space sum-rank latroids need m_i >= n_i in every block"
        )
    dims = [m if spaces == "column" else n for m, n in mc.blocks]
    factors = [subspace_lattice(mc.q, d, cap=cap) for d in dims]
    lattice = factors[0]
    for f in factors[1:]:
        lattice = product_lattice(lattice, f)

    def unpack(label):
        out = []
        for _ in range(mc.ell - 1):
            label, last = label
            out.append(last)
        out.append(label)
        return tuple(reversed(out))

    contains = _rows_in_subspace if spaces == "row" else _cols_in_subspace

    def subcode_dim(bases) -> int:
        words = [
            w
            for w in mc.codewords
            if all(contains(mat, basis, mc.q) for mat, basis in zip(w, bases))
        ]
        return intlog(mc.q, len(words))

    def length(label):
        bases = unpack(label)
        return sum(m * len(b) for (m, _), b in zip(mc.blocks, bases))

    def rho(label):
        return length(label) - subcode_dim(unpack(label))

    lt = Latroid.from_functions(lattice, rho, length)
    return _validated(lt, validate)


# -- generalized weights of codes -----------------------------------------------


def code_gen_weights_dbar(code: Code, supp: Support, r: int | None = None):
    """Length-based generalized weights: the least wt(D) over submodules D
    with lambda(D) >= r.  Brute force over all submodules.  Returns the
    value for one r, or the full list for r = 1..lambda(C)."""
    lam = length_lambda(code)
    subs = [(length_lambda(d), sum(supp.of_set(d.codewords))) for d in
            enumerate_submodules(code)]

    def one(rr: int) -> int:
        if not 1 <= rr <= lam:
            raise ValueError(f"r = {rr} outside [1, {lam}]")
        return min(w for l, w in subs if l >= rr)

    if r is not None:
        return one(r)
    return [one(rr) for rr in range(1, lam + 1)]


def code_gen_weights_dr(code: Code, supp: Support, r: int | None = None):
    """Generator-based generalized weights: the least wt(D) over submodules
    D with M(D) >= r, for r = 1..M(C).  Errors loudly if no submodule
    reaches some r in range."""
    cap_m = big_m(code)
    subs = [(big_m(d), sum(supp.of_set(d.codewords))) for d in
            enumerate_submodules(code)]

    def one(rr: int) -> int:
        if not 1 <= rr <= cap_m:
            raise ValueError(f"r = {rr} outside [1, {cap_m}]")
        feasible = [w for m, w in subs if m >= rr]
        if not feasible:
            raise ValueError(f"no submodule with M(D) >= {rr}; enumeration bug?")
        return min(feasible)

    if r is not None:
        return one(r)
    return [one(rr) for rr in range(1, cap_m + 1)]


def latroid_gen_weights(code: Code) -> list[int]:
    """d_r of the chain-support latroid for r = 1..lambda(C), computed as a
    lattice minimum (1-norm collapse over the CRT factors)."""
    from .core import collapse_scalars

    lt = chain_support_latroid(code, validate=False)
    if lt.udim > 1:
        lt = collapse_scalars(lt, validate=False)
    return [generalized_weight(lt, r) for r in range(1, length_lambda(code) + 1)]


def latroid_weights_equal_code_weights(code: Code, supp: Support | None = None) -> Report:
    """Check d_bar_r(C) = d_r(chain-support latroid) for every r, computing
    the two sides independently (submodule oracle vs lattice minimum)."""
    supp = supp or ChainSupport(code.ring, code.n)
    lam = length_lambda(code)
    if lam == 0:
        return Report.from_checks([Check("dbar_equals_latroid", True, "zero code")])
    oracle = code_gen_weights_dbar(code, supp)
    lattice_side = latroid_gen_weights(code)
    checks = [
        Check(
            f"dbar_{r}",
            oracle[r - 1] == lattice_side[r - 1],
            f"oracle {oracle[r - 1]} vs latroid {lattice_side[r - 1]}",
        )
        for r in range(1, lam + 1)
    ]
    return Report.from_checks(checks)


# -- rank-metric generalized weights ------------------------------------------------


def _all_subcodes(mc: MatrixCode) -> list[frozenset]:
    """All F_q-subspaces of the code, as codeword sets."""
    words = sorted(mc.codewords)
    zero = words[0] if words else None
    found = {frozenset([zero])}
    frontier = [frozenset([zero])]

    def add_words(a, b):
        return tuple(
            tuple(tuple((x + y) % mc.q for x, y in zip(ra, rb)) for ra, rb in zip(ma, mb))
            for ma, mb in zip(a, b)
        )

    def grow(sub, w):
        out = set(sub)
        for c in range(1, mc.q):
            scaled = w
            for _ in range(c - 1):
                scaled = add_words(scaled, w)
            out |= {add_words(s, scaled) for s in sub}
        return frozenset(out)

    while frontier:
        new = []
        for sub in frontier:
            for w in words:
                if w not in sub:
                    grown = grow(sub, w)
                    if grown not in found:
                        found.add(grown)
                        new.append(grown)
        frontier = new
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def _rowspace_dim_of_subcode(sub, q: int, block: int | None = None) -> int:
    rows = []
    for word in sub:
        mats = word if block is None else (word[block],)
        for mat in mats:
            rows.extend(mat)
    return len(linalg.rref(rows, q))


def rank_code_gen_weights(mc: MatrixCode) -> list[int]:
    """Generalized rank weights by subcode enumeration:
    d_r = min{dim rowspace(D) : D a subcode, dim D >= r}."""
    dim_c = mc.dim()
    subs = [
        (intlog(mc.q, len(s)), _rowspace_dim_of_subcode(s, mc.q))
        for s in _all_subcodes(mc)
    ]
    return [
        min(w for d, w in subs if d >= r) for r in range(1, dim_c + 1)
    ]


def rank_weights_equal(mc: MatrixCode, cap: int = 256) -> Report:
    """Check m * d_r(C) = d_r(rank-metric latroid) for all r; needs m > n."""
    m, n = mc.shape
    if m <= n:
        raise ValueError("the rank-weight identity is stated for m > n")
    if mc.dim() == 0:
        return Report.from_checks([Check("rank_weights", True, "zero code")])
    lt = rank_metric_latroid(mc, validate=False, cap=cap)
    oracle = rank_code_gen_weights(mc)
    checks = [
        Check(
            f"rank_d_{r}",
            m * oracle[r - 1] == generalized_weight(lt, r),
            f"m*oracle {m * oracle[r - 1]} vs latroid {generalized_weight(lt, r)}",
        )
        for r in range(1, mc.dim() + 1)
    ]
    return Report.from_checks(checks)


def sum_rank_code_gen_weights(mc: MatrixCode) -> list[int]:
    """Generalized sum-rank weights (equal m_i) by subcode enumeration:
    d_r = min{sum_i dim rowspace_i(D) : D a subcode, dim D >= r}."""
    dim_c = mc.dim()
    subs = []
    for s in _all_subcodes(mc):
        w = sum(
            _rowspace_dim_of_subcode(s, mc.q, block=i) for i in range(mc.ell)
        )
        subs.append((intlog(mc.q, len(s)), w))
    return [min(w for d, w in subs if d >= r) for r in range(1, dim_c + 1)]


def sum_rank_weights_equal(mc: MatrixCode, cap: int = 256) -> Report:
    """Check m * d_r(C) = d_r(sum-rank latroid) when every block shares
    m_i = m > n_i, with the row-space convention that the anticode argument
    supports."""
    ms = {m for m, _ in mc.blocks}
    if len(ms) != 1:
        raise ValueError("the sum-rank weight identity needs equal m_i")
    m = ms.pop()
    if any(m <= n for _, n in mc.blocks):
        raise ValueError("the sum-rank weight identity needs m > n_i")
    if mc.dim() == 0:
        return Report.from_checks([Check("sum_rank_weights", True, "zero code")])
    lt = sum_rank_latroid(mc, spaces="row", validate=False, cap=cap)
    oracle = sum_rank_code_gen_weights(mc)
    checks = [
        Check(
            f"sum_rank_d_{r}",
            m * oracle[r - 1] == generalized_weight(lt, r),
            f"m*oracle {m * oracle[r - 1]} vs latroid {generalized_weight(lt, r)}",
        )
        for r in range(1, mc.dim() + 1)
    ]
    return Report.from_checks(checks)


# -- block-code generalized weights ---------------------------------------------


def hamming_code_gen_weights(code: Code) -> list[int]:
    """Classical generalized Hamming weights by subcode enumeration:
    d_r = min{|supp(D)| : D a subcode, dim D >= r}."""
    from .supports import HammingSupport

    q = _require_field(code.ring)
    supp = HammingSupport(code.ring, code.n)
    k = intlog(q, len(code))
    subs = [
        (intlog(q, len(d)), sum(supp.of_set(d.codewords)))
        for d in enumerate_submodules(code)
    ]
    return [min(w for d, w in subs if d >= r) for r in range(1, k + 1)]


def block_matroid_weights_equal(code: Code) -> Report:
    """Check d_r(block matroid) equals the classical generalized Hamming
    weights of the code."""
    q = _require_field(code.ring)
    k = intlog(q, len(code))
    if k == 0:
        return Report.from_checks([Check("block_weights", True, "zero code")])
    lt = block_matroid(code, validate=False)
    oracle = hamming_code_gen_weights(code)
    checks = [
        Check(
            f"hamming_d_{r}",
            oracle[r - 1] == generalized_weight(lt, r),
            f"oracle {oracle[r - 1]} vs latroid {generalized_weight(lt, r)}",
        )
        for r in range(1, k + 1)
    ]
    return Report.from_checks(checks)


# -- circuits as minimal supports -----------------------------------------------


def minimal_codeword_rowspaces(mc: MatrixCode) -> set:
    """Minimal nonzero codeword row spaces (rref labels), the expected
    circuits of the rank-metric latroid."""
    spaces = {
        linalg.rref(c[0], mc.q)
        for c in mc.codewords
        if any(any(row) for row in c[0])
    }
    return {
        s
        for s in spaces
        if not any(
            t != s and linalg.span_contains(s, t, mc.q) for t in spaces
        )
    }
