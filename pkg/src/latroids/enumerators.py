"""Exact multivariate polynomials with integer-vector exponents, weight
enumerators, and the weighted Tutte-Whitney rank generating functions R and
R' of a latroid on a grid lattice.

The refined weight enumerator of a code can be read off from R' of its
chain-support latroid.  The substitution z -> (y - x)/y never happens as a
rational function: the closed form multiplies each term by (y - x)^e and
drops e from the matching y exponent, so everything stays an integer
polynomial (the denominator cancels exactly).
"""

from __future__ import annotations

import itertools

from .code_latroids import chain_support_latroid
from .codes import Code, enumerate_submodules, length_lambda
from .core import Latroid
from .report import Check, Report
from .supports import ChainSupport, Support, split_support


class ExpPoly:
    """A polynomial as a map from exponent vectors to integer coefficients.

    The variable layout is fixed at construction; no zero coefficients are
    stored.  Arithmetic is exact.
    """

    def __init__(self, nvars: int, terms=None, names=None):
        self.nvars = nvars
        self.names = tuple(names) if names else tuple(f"t{i+1}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("one name per variable")
        self.terms: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            self._add_term(tuple(exps), int(coeff))

    def _add_term(self, exps: tuple[int, ...], coeff: int) -> None:
        if len(exps) != self.nvars:
            raise ValueError(f"exponent vector {exps} does not have {self.nvars} entries")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        new = self.terms.get(exps, 0) + coeff
        if new:
            self.terms[exps] = new
        else:
            self.terms.pop(exps, None)

    @classmethod
    def zero(cls, nvars: int, names=None) -> "ExpPoly":
        return cls(nvars, {}, names)

    @classmethod
    def constant(cls, c: int, nvars: int, names=None) -> "ExpPoly":
        return cls(nvars, {(0,) * nvars: c} if c else {}, names)

    @classmethod
    def monomial(cls, exps, coeff: int = 1, names=None) -> "ExpPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff}, names)

    @classmethod
    def variable(cls, i: int, nvars: int, names=None) -> "ExpPoly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: 1}, names)

    def _like(self, terms) -> "ExpPoly":
        return ExpPoly(self.nvars, terms, self.names)

    def __eq__(self, other):
        return (
            isinstance(other, ExpPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        out = dict(self.terms)
        for exps, c in other.terms.items():
            new = out.get(exps, 0) + c
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        return self._like(out)

    def __neg__(self) -> "ExpPoly":
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-other)

    def __mul__(self, other) -> "ExpPoly":
        if isinstance(other, int):
            return self._like({e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(e, 0) + c1 * c2
                if new:
                    out[e] = new
                else:
                    out.pop(e, None)
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExpPoly":
        if n < 0:
            raise ValueError("only nonnegative powers")
        out = ExpPoly.constant(1, self.nvars, self.names)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def total(self) -> int:
        """Sum of coefficients (evaluation at all-ones)."""
        return sum(self.terms.values())

    def evaluate(self, values) -> int:
        values = tuple(values)
        out = 0
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                term *= v**e
            out += term
        return out

    def set_to_one(self, indices) -> "ExpPoly":
        """Substitute 1 for the given variables and drop them."""
        drop = set(indices)
        keep = [i for i in range(self.nvars) if i not in drop]
        names = tuple(self.names[i] for i in keep)
        out: dict[tuple[int, ...], int] = {}
        for exps, c in self.terms.items():
            e = tuple(exps[i] for i in keep)
            out[e] = out.get(e, 0) + c
        return ExpPoly(len(keep), {e: c for e, c in out.items() if c}, names)

    def collapse(self, mapping, new_nvars: int, names=None) -> "ExpPoly":
        """Merge variables: exponents of old variable i add onto new
        variable mapping[i]."""
        out: dict[tuple[int, ...], int] = {}
        for exps, c in self.terms.items():
            e = [0] * new_nvars
            for i, x in enumerate(exps):
                e[mapping[i]] += x
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return ExpPoly(new_nvars, {e: c for e, c in out.items() if c}, names)

    def embed(self, positions, total: int, names=None) -> "ExpPoly":
        """View the polynomial inside a larger variable space, placing old
        variable i at positions[i]."""
        out = {}
        for exps, c in self.terms.items():
            e = [0] * total
            for pos, x in zip(positions, exps):
                e[pos] = x
            out[tuple(e)] = c
        return ExpPoly(total, out, names)

    def sorted_terms(self):
        """Graded-lexicographic, highest first; the serialization order."""
        return sorted(
            self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True
        )

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = [
                self.names[i] if e == 1 else f"{self.names[i]}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def to_json_dict(self) -> dict:
        return {
            "variables": list(self.names),
            "terms": [
                {"exponents": list(e), "coefficient": c}
                for e, c in self.sorted_terms()
            ],
        }

    def __repr__(self):
        return f"ExpPoly({self.render()})"


def _xy_names(u: int) -> tuple[str, ...]:
    return tuple(f"x{i+1}" for i in range(u)) + tuple(f"y{i+1}" for i in range(u))


# -- weight enumerators -----------------------------------------------------


def refined_enumerator(code: Code, supp: Support) -> ExpPoly:
    """sum over codewords of x^supp(c) y^(supp(R^n) - supp(c))."""
    top = supp.ambient_support()
    u = supp.u
    poly = ExpPoly.zero(2 * u, _xy_names(u))
    for c in code.codewords:
        s = supp(c)
        exps = s + tuple(t - x for t, x in zip(top, s))
        poly._add_term(exps, 1)
    return poly


def homogeneous_enumerator(code: Code, supp: Support) -> ExpPoly:
    """The refined enumerator with every x_i set to x and y_i to y."""
    u = supp.u
    refined = refined_enumerator(code, supp)
    mapping = [0] * u + [1] * u
    return refined.collapse(mapping, 2, ("x", "y"))


def weight_distribution(code: Code, supp: Support) -> list[int]:
    """A_w = number of codewords of weight w, for w = 0..wt(R^n)."""
    out = [0] * (supp.ambient_weight() + 1)
    for c in code.codewords:
        out[supp.weight(c)] += 1
    return out


def generalized_weight_distribution(code: Code, supp: Support, r: int) -> list[int]:
    """A^(r)_w = number of submodules with lambda = r and wt = w."""
    out = [0] * (supp.ambient_weight() + 1)
    for d in enumerate_submodules(code):
        if length_lambda(d) == r:
            out[sum(supp.of_set(d.codewords))] += 1
    return out


def generalized_enumerator(code: Code, supp: Support, r: int) -> ExpPoly:
    """The r-th generalized weight enumerator
    sum_w A^(r)_w x^(wt(R^n)-w) y^w, for 0 <= r <= lambda(C).

    The minimum w with A^(j)_w != 0 over j >= r recovers the r-th
    generalized weight; that consistency is asserted here.
    """
    lam = length_lambda(code)
    if not 0 <= r <= lam:
        raise ValueError(f"r = {r} outside [0, {lam}]")
    wt_top = supp.ambient_weight()
    dist = generalized_weight_distribution(code, supp, r)
    poly = ExpPoly.zero(2, ("x", "y"))
    for w, a in enumerate(dist):
        if a:
            poly._add_term((wt_top - w, w), a)
    if r >= 1:
        from .code_latroids import code_gen_weights_dbar

        mins = [
            w
            for j in range(r, lam + 1)
            for w, a in enumerate(generalized_weight_distribution(code, supp, j))
            if a
        ]
        expected = code_gen_weights_dbar(code, supp, r)
        if min(mins) != expected:
            raise AssertionError(
                f"generalized enumerator inconsistent with d_bar_{r}: "
                f"{min(mins)} != {expected}"
            )
    return poly


# -- Tutte-Whitney rank generating functions -----------------------------------


def _grid_labels(lt: Latroid):
    labels = lt.lattice.labels
    if not all(
        isinstance(lab, tuple) and all(isinstance(x, int) for x in lab)
        for lab in labels
    ):
        raise ValueError("Tutte-Whitney sums need integer-vector lattice labels")
    return labels


def tutte_whitney_R(lt: Latroid) -> ExpPoly:
    """R = sum over lattice elements M of
    x^M y^(1_L - M) u^(rho(1)-rho(M)) v^(len(M)-rho(M))."""
    labels = _grid_labels(lt)
    g = len(labels[0])
    s = lt.udim
    names = (
        tuple(f"x{i+1}" for i in range(g))
        + tuple(f"y{i+1}" for i in range(g))
        + tuple(f"u{i+1}" for i in range(s))
        + tuple(f"v{i+1}" for i in range(s))
    )
    top_label = lt.lattice.labels[lt.lattice.top]
    top_rank = lt.top_rank()
    poly = ExpPoly.zero(2 * g + 2 * s, names)
    for i, m in enumerate(labels):
        comp = tuple(t - x for t, x in zip(top_label, m))
        uexp = tuple(a - b for a, b in zip(top_rank, lt.rank[i]))
        vexp = tuple(a - b for a, b in zip(lt.length[i], lt.rank[i]))
        poly._add_term(m + comp + uexp + vexp, 1)
    return poly


def tutte_whitney_Rprime(lt: Latroid) -> ExpPoly:
    """R' carries an extra z^(M~ - M) with M~ = (M + 1) ^ 1_L; setting
    z = 1 recovers R."""
    labels = _grid_labels(lt)
    g = len(labels[0])
    s = lt.udim
    names = (
        tuple(f"x{i+1}" for i in range(g))
        + tuple(f"z{i+1}" for i in range(g))
        + tuple(f"y{i+1}" for i in range(g))
        + tuple(f"u{i+1}" for i in range(s))
        + tuple(f"v{i+1}" for i in range(s))
    )
    top_label = lt.lattice.labels[lt.lattice.top]
    top_rank = lt.top_rank()
    poly = ExpPoly.zero(3 * g + 2 * s, names)
    for i, m in enumerate(labels):
        tilde = tuple(min(x + 1, t) for x, t in zip(m, top_label))
        zexp = tuple(a - b for a, b in zip(tilde, m))
        comp = tuple(t - x for t, x in zip(top_label, m))
        uexp = tuple(a - b for a, b in zip(top_rank, lt.rank[i]))
        vexp = tuple(a - b for a, b in zip(lt.length[i], lt.rank[i]))
        poly._add_term(m + zexp + comp + uexp + vexp, 1)
    return poly


def rprime_z_to_one(rp: ExpPoly, g: int, s: int) -> ExpPoly:
    """R from R' by the substitution z = 1."""
    return rp.set_to_one(range(g, 2 * g))


def _enumerator_from_rprime(rp: ExpPoly, g: int, p: int) -> ExpPoly:
    """Turn R' of a chain-support latroid (udim 1) into the refined weight
    enumerator.

    Each R' term x^B z^e y^(T-B) u^a v^b contributes
    p^b * x^B * (y - x)^e * y^(T-B-e): substituting the residue field size
    into the length-minus-rank slot counts the codewords supported inside B,
    and the binomial factor performs the inclusion-exclusion that isolates
    exact supports.
    """
    names = _xy_names(g)
    out = ExpPoly.zero(2 * g, names)
    for exps, coeff in rp.terms.items():
        b = exps[:g]
        zexp = exps[g : 2 * g]
        yexp = exps[2 * g : 3 * g]
        vexp = exps[3 * g + 1]
        term = ExpPoly.monomial(
            b + tuple(t - e for t, e in zip(yexp, zexp)),
            coeff * p**vexp,
            names,
        )
        for i, e in enumerate(zexp):
            if e:
                diff = ExpPoly.variable(g + i, 2 * g, names) - ExpPoly.variable(
                    i, 2 * g, names
                )
                term = term * diff**e
        out = out + term
    return out


def enumerator_from_tutte(code: Code) -> ExpPoly:
    """The refined weight enumerator of a chain-ring code, computed from R'
    of its chain-support latroid instead of from the codewords."""
    ring = code.ring
    if ring.ell != 1:
        raise ValueError("use pir_tutte_corollary for product rings")
    lt = chain_support_latroid(code, validate=False)
    rp = tutte_whitney_Rprime(lt)
    return _enumerator_from_rprime(rp, code.n, ring.factors[0].residue_field_size)


# -- products over CRT factors ----------------------------------------------------


def _chain_groups(ell: int, n: int) -> list[list[int]]:
    """Positions of each factor's support coordinates in the coordinate-major
    chain layout."""
    return [[i * ell + j for i in range(n)] for j in range(ell)]


def enumerator_product(code: Code, supp: Support) -> ExpPoly:
    """The refined enumerator computed as the product of the CRT factors'
    refined enumerators, expressed in the layout of ``supp``."""
    parts, perm = split_support(supp)
    u = supp.u
    names = _xy_names(u)
    offsets = []
    at = 0
    for part in parts:
        offsets.append(list(range(at, at + part.u)))
        at += part.u
    groups = [[perm[t] for t in offs] for offs in offsets]
    out = ExpPoly.constant(1, 2 * u, names)
    for j, (part, group) in enumerate(zip(parts, groups)):
        factor_poly = refined_enumerator(code.factor(j), part)
        positions = list(group) + [u + g for g in group]
        out = out * factor_poly.embed(positions, 2 * u, names)
    return out


def pir_tutte_corollary(code: Code, supp: Support | None = None) -> Report:
    """Check that the per-factor R'-derived enumerators multiply to the
    refined enumerator of a product-ring code under the product chain
    support."""
    ring = code.ring
    supp = supp or ChainSupport(ring, code.n)
    u = supp.u
    names = _xy_names(u)
    groups = _chain_groups(ring.ell, code.n)
    prod = ExpPoly.constant(1, 2 * u, names)
    for j, group in enumerate(groups):
        factor_code = code.factor(j)
        w_j = enumerator_from_tutte(factor_code)
        positions = list(group) + [u + g for g in group]
        prod = prod * w_j.embed(positions, 2 * u, names)
    direct = refined_enumerator(code, supp)
    ok = prod == direct
    detail = "" if ok else f"product {prod.render()} != direct {direct.render()}"
    checks = [Check("factorized_tutte_enumerator", ok, detail)]
    split_prod = enumerator_product(code, supp)
    ok2 = split_prod == direct
    checks.append(
        Check("factorized_refined_enumerator", ok2,
              "" if ok2 else "per-factor refined product mismatch")
    )
    return Report.from_checks(checks)


# -- internal identities ------------------------------------------------------------


def inclusion_exclusion_check(code: Code) -> Report:
    """Exact-support counts two ways on the chain-support grid: directly,
    and by alternating sums of the dominated-support counts |C_B|."""
    ring = code.ring
    supp = ChainSupport(ring, code.n)
    lt = chain_support_latroid(code, validate=False)
    labels = lt.lattice.labels
    support_of = {c: supp(c) for c in code.codewords}
    counts = {
        a: sum(1 for s in support_of.values() if s == a) for a in labels
    }
    dominated = {
        b: sum(
            1 for s in support_of.values() if all(x <= y for x, y in zip(s, b))
        )
        for b in labels
    }
    witness = None
    u = supp.u
    for a in labels:
        total = 0
        for delta in itertools.product((0, 1), repeat=u):
            b = tuple(x - d for x, d in zip(a, delta))
            if any(x < 0 for x in b):
                continue
            total += (-1) ** sum(delta) * dominated[b]
        if total != counts[a]:
            witness = f"A = {a}: {total} != {counts[a]}"
            break
    return Report.from_checks(
        [Check("inclusion_exclusion", witness is None, witness or "")]
    )


def binomial_identity_check(u: int) -> Report:
    """x^B (y-x)^(1-B) = sum over 0/1 vectors A >= B of
    (-1)^{|A|-|B|} x^A y^(1-A), as an identity of polynomials.

    This is the expansion the closed enumerator form rests on; note the
    left factor is a power of x (a y-power there would already fail at
    u = 1, B = 1)."""
    names = _xy_names(u)
    witness = None
    for b in itertools.product((0, 1), repeat=u):
        lhs = ExpPoly.monomial(b + (0,) * u, 1, names)
        for i, e in enumerate(b):
            if not e:
                diff = ExpPoly.variable(u + i, 2 * u, names) - ExpPoly.variable(
                    i, 2 * u, names
                )
                lhs = lhs * diff
        rhs = ExpPoly.zero(2 * u, names)
        for a in itertools.product((0, 1), repeat=u):
            if all(x >= y for x, y in zip(a, b)):
                sign = (-1) ** (sum(a) - sum(b))
                rhs = rhs + ExpPoly.monomial(
                    a + tuple(1 - x for x in a), sign, names
                )
        if lhs != rhs:
            witness = f"B = {b}"
            break
    return Report.from_checks(
        [Check("binomial_identity", witness is None, witness or "")]
    )
