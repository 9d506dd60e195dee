import itertools

import pytest

from latroids.codes import (
    big_m,
    code_intersection,
    code_sum,
    cyclic_code,
    enumerate_submodules,
    full_space,
    irredundant_generating_sizes,
    length_lambda,
    mu,
    rect_leq,
    rectangular_closure,
    span,
    span_from_ints,
    zero_code,
)
from latroids.errors import CapExceededError
from latroids.rings import parse_ring

Z4 = parse_ring("Z_4")
Z8 = parse_ring("Z_8")
F2 = parse_ring("Z_2")


def ints(ring, words):
    return {tuple(ring.to_int(a) for a in w) for w in words}


def test_span_z4_12():
    c = span_from_ints(Z4, 2, [[1, 2]])
    assert ints(Z4, c.codewords) == {(0, 0), (1, 2), (2, 0), (3, 2)}


def test_span_empty_is_zero():
    c = span(Z4, 2, [])
    assert len(c) == 1


def test_span_f2_two_generators():
    c = span_from_ints(F2, 3, [[1, 1, 0], [0, 1, 1]])
    assert len(c) == 4


def test_span_cap():
    with pytest.raises(CapExceededError):
        span_from_ints(F2, 3, [[1, 0, 0]], cap=4)


def test_lambda_examples():
    assert length_lambda(span_from_ints(Z4, 2, [[1, 2]])) == 2
    assert length_lambda(zero_code(Z4, 2)) == 0
    assert length_lambda(span_from_ints(Z8, 1, [[2]])) == 2


def test_mu_examples():
    assert mu(span_from_ints(Z4, 2, [[1, 2]])) == 1
    assert mu(zero_code(Z4, 2)) == 0
    assert big_m(zero_code(Z4, 2)) == 0
    assert mu(full_space(Z4, 2)) == 2


def test_big_m_splits_over_factors():
    z6 = parse_ring("Z_2 x Z_3")
    c = span_from_ints(z6, 1, [[1]])
    assert big_m(c) == 2  # one generator needed in each factor
    assert mu(c) == 1


def test_cardinality_is_power_of_residue_field():
    # |C| = prod p_i^(lambda_i) on every enumerated submodule
    for code in (span_from_ints(Z4, 2, [[1, 2], [0, 2]]), full_space(Z8, 1)):
        for sub in enumerate_submodules(code):
            sizes = 1
            for i, f in enumerate(code.ring.factors):
                sizes *= f.p ** (length_lambda(sub.factor(i)))
            assert sizes == len(sub)


def test_enumerate_submodules_z4_12():
    c = span_from_ints(Z4, 2, [[1, 2]])
    subs = enumerate_submodules(c)
    assert [len(s) for s in subs] == [1, 2, 4]
    assert ints(Z4, subs[1].codewords) == {(0, 0), (2, 0)}


def test_enumerate_submodules_zero_and_plane():
    assert len(enumerate_submodules(zero_code(Z4, 2))) == 1
    assert len(enumerate_submodules(full_space(F2, 2))) == 5


def test_enumerate_submodules_closed_under_sum_and_intersection():
    c = span_from_ints(Z4, 2, [[1, 1], [0, 2]])
    subs = enumerate_submodules(c)
    keys = {s.codewords for s in subs}
    for a, b in itertools.combinations(subs, 2):
        assert code_sum(a, b).codewords in keys
        assert code_intersection(a, b).codewords in keys


def test_enumerate_submodules_cap():
    with pytest.raises(CapExceededError):
        enumerate_submodules(full_space(F2, 3), cap=4)


def test_mu_lambda_relation_on_all_submodules():
    # mu <= lambda with equality exactly when alpha * C = 0
    for ambient in (full_space(Z4, 2), full_space(Z8, 1)):
        ring = ambient.ring
        p = ring.factors[0].p
        alpha = (p % ring.factors[0].size,)
        for sub in enumerate_submodules(ambient):
            assert mu(sub) <= length_lambda(sub)
            killed = sub.scaled(alpha)
            assert (mu(sub) == length_lambda(sub)) == (len(killed) == 1)


def test_irredundant_sizes_cover_mu_to_bigm():
    # the generator-count range of a product-ring module
    z6 = parse_ring("Z_2 x Z_3")
    whole = span_from_ints(z6, 1, [[1]])
    assert irredundant_generating_sizes(whole) == {1, 2}
    c = span_from_ints(Z4, 2, [[1, 2]])
    assert irredundant_generating_sizes(c) == {1}


def test_generating_sizes_nonempty_up_to_big_m():
    # every j in [1, M(C)] is witnessed by some submodule
    for code in (
        span_from_ints(Z4, 2, [[1, 0], [0, 1]]),
        span_from_ints(parse_ring("Z_2 x Z_3"), 2, [[1, 0], [0, 1]]),
    ):
        sizes = set()
        for sub in enumerate_submodules(code):
            sizes |= irredundant_generating_sizes(sub)
        assert set(range(1, big_m(code) + 1)) <= sizes


def test_rectangular_closure_examples():
    ring = Z4
    c = span_from_ints(ring, 2, [[1, 2]])
    closed = rectangular_closure(c)
    assert [i.exponents for i in closed] == [(0,), (1,)]
    assert [i.exponents for i in rectangular_closure(zero_code(ring, 2))] == [(2,), (2,)]
    c2 = span_from_ints(ring, 2, [[2, 0]])
    assert [i.exponents for i in rectangular_closure(c2)] == [(1,), (2,)]


def test_rectangular_closure_is_minimal():
    from latroids.codes import all_rectangular_modules, rect_contains

    ring = Z4
    c = span_from_ints(ring, 2, [[1, 2]])
    closed = rectangular_closure(c)
    for rect in all_rectangular_modules(ring, 2):
        if all(rect_contains(ring, rect, w) for w in c.codewords):
            assert rect_leq(ring, closed, rect)


def test_code_equality_ignores_generators():
    a = span_from_ints(Z4, 1, [[1]])
    b = span_from_ints(Z4, 1, [[3]])
    assert a == b and hash(a) == hash(b)
