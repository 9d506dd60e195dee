"""Weight-preserving module automorphisms of R^n: verification, the
diagonal-times-permutation decomposition over chain rings, per-factor
projections over product rings, and invariance of code invariants.
"""

from __future__ import annotations

import random

from .codes import Code, length_lambda
from .limits import VECTOR_ENUM_CAP, check_cap
from .report import Check, Report
from .rings import Element, Pir, Vector
from .supports import Support, split_support, validate_modular

RingMatrix = tuple[tuple[Element, ...], ...]


def matrix_from_ints(ring: Pir, rows) -> RingMatrix:
    return tuple(tuple(ring.from_int(int(x)) for x in row) for row in rows)


def identity_matrix(ring: Pir, n: int) -> RingMatrix:
    return tuple(
        tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n)
    )


def apply_matrix(ring: Pir, mat: RingMatrix, v: Vector) -> Vector:
    n = len(mat)
    if len(v) != n:
        raise ValueError(f"vector length {len(v)} != matrix size {n}")
    out = []
    for i in range(n):
        acc = ring.zero
        for j in range(n):
            acc = ring.add(acc, ring.mul(mat[i][j], v[j]))
        out.append(acc)
    return tuple(out)


def matmul(ring: Pir, a: RingMatrix, b: RingMatrix) -> RingMatrix:
    n = len(a)
    return tuple(
        tuple(
            _dot(ring, a, b, i, j) for j in range(n)
        )
        for i in range(n)
    )


def _dot(ring: Pir, a, b, i, j) -> Element:
    acc = ring.zero
    for t in range(len(a)):
        acc = ring.add(acc, ring.mul(a[i][t], b[t][j]))
    return acc


def apply_to_code(mat: RingMatrix, code: Code) -> Code:
    ring = code.ring
    words = frozenset(apply_matrix(ring, mat, c) for c in code.codewords)
    return Code(ring, code.n, (), words)


def is_isometry(mat: RingMatrix, supp: Support, cap: int = VECTOR_ENUM_CAP) -> bool:
    """True iff v -> mat v is a bijection of R^n preserving the weight,
    checked exhaustively."""
    ring = supp.ring
    n = len(mat)
    check_cap(ring.size**n, cap, "isometry verification")
    image = set()
    for v in ring.vectors(n, cap=cap):
        w = apply_matrix(ring, mat, v)
        if supp.weight(w) != supp.weight(v):
            return False
        image.add(w)
    return len(image) == ring.size**n


def decompose_chain_isometry(mat: RingMatrix, supp: Support):
    """Write a chain-ring isometry as D * P with D diagonal invertible and
    P a permutation matrix.

    Columns are processed by increasing per-coordinate support weight (the
    order the inductive argument peels them); each column must hold exactly
    one invertible entry among the unused rows and zeros elsewhere, or the
    input was no isometry of a standard modular support.
    """
    ring = supp.ring
    if ring.ell != 1:
        raise ValueError("the D*P decomposition is for chain rings")
    if not supp.is_standard or not validate_modular(supp).ok:
        raise ValueError("decomposition needs a standard modular support")
    if not is_isometry(mat, supp):
        raise ValueError("matrix is not an isometry for the given support")

    n = len(mat)
    order = sorted(range(n), key=lambda i: (supp.weight(ring.basis_vector(n, i)), i))
    remaining = set(range(n))
    row_of_col = {}
    diag = {}
    for j in order:
        units = [r for r in remaining if ring.is_unit(mat[r][j])]
        if len(units) != 1:
            raise AssertionError(
                f"column {j} has {len(units)} invertible entries among unused rows; "
                "an isometry of a standard modular support must be monomial"
            )
        r0 = units[0]
        for r in remaining:
            if r != r0 and mat[r][j] != ring.zero:
                raise AssertionError(
                    f"column {j} is not zero at row {r}; "
                    "an isometry of a standard modular support must be monomial"
                )
        row_of_col[j] = r0
        diag[r0] = mat[r0][j]
        remaining.remove(r0)

    D = tuple(
        tuple(diag[i] if i == j else ring.zero for j in range(n)) for i in range(n)
    )
    P = tuple(
        tuple(ring.one if row_of_col.get(j) == i else ring.zero for j in range(n))
        for i in range(n)
    )
    if matmul(ring, D, P) != mat:
        raise AssertionError("decomposition does not reproduce the matrix")
    return D, P


def is_permutation_matrix(ring: Pir, mat: RingMatrix) -> bool:
    n = len(mat)
    for row in mat:
        if sum(1 for x in row if x == ring.one) != 1:
            return False
        if any(x not in (ring.zero, ring.one) for x in row):
            return False
    return all(
        sum(1 for i in range(n) if mat[i][j] == ring.one) == 1 for j in range(n)
    )


def is_diagonal_invertible(ring: Pir, mat: RingMatrix) -> bool:
    n = len(mat)
    for i in range(n):
        for j in range(n):
            if i == j:
                if not ring.is_unit(mat[i][j]):
                    return False
            elif mat[i][j] != ring.zero:
                return False
    return True


def pir_isometry_projections(mat: RingMatrix, supp: Support):
    """The per-factor matrices of an isometry of a product ring; each is
    checked to be an isometry of R_i^n for the split factor support."""
    ring = supp.ring
    if not is_isometry(mat, supp):
        raise ValueError("matrix is not an isometry for the given support")
    parts, _ = split_support(supp)
    out = []
    for i, part in enumerate(parts):
        sub = ring.factor_ring(i)
        m_i = tuple(tuple((entry[i],) for entry in row) for row in mat)
        if not is_isometry(m_i, part):
            raise AssertionError(f"projection to factor {i} is not an isometry")
        out.append((i, m_i))
    return out


def random_monomial_isometry(ring: Pir, n: int, rng: random.Random) -> RingMatrix:
    """A random D * P product: unit diagonal times permutation."""
    units = [u for u in ring.units()]
    perm = list(range(n))
    rng.shuffle(perm)
    return tuple(
        tuple(
            rng.choice(units) if perm[j] == i else ring.zero for j in range(n)
        )
        for i in range(n)
    )


def equivalence_invariance_check(code: Code, mat: RingMatrix, supp: Support) -> Report:
    """Map the code through the isometry and compare the invariants of the
    two sides: both families of generalized weights and the weight
    distribution."""
    from .code_latroids import code_gen_weights_dbar, code_gen_weights_dr
    from .enumerators import weight_distribution

    image = apply_to_code(mat, code)
    checks = []

    lam1, lam2 = length_lambda(code), length_lambda(image)
    checks.append(Check("lambda_equal", lam1 == lam2, f"{lam1} vs {lam2}"))

    if lam1 == lam2 and lam1 > 0:
        d1 = code_gen_weights_dbar(code, supp)
        d2 = code_gen_weights_dbar(image, supp)
        checks.append(Check("dbar_equal", d1 == d2, f"{d1} vs {d2}"))
        m1 = code_gen_weights_dr(code, supp)
        m2 = code_gen_weights_dr(image, supp)
        checks.append(Check("dmu_equal", m1 == m2, f"{m1} vs {m2}"))

    w1 = weight_distribution(code, supp)
    w2 = weight_distribution(image, supp)
    checks.append(Check("weight_distribution_equal", w1 == w2, f"{w1} vs {w2}"))

    return Report.from_checks(checks)
