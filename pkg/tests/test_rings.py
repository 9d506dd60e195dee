import itertools
import math

import pytest

from latroids.rings import ChainRing, Pir, chain_ring, intlog, parse_ring, product_ring


def test_parse_ring_forms():
    assert parse_ring("Z_8").sizes == (8,)
    assert parse_ring("Z_{2^3}").sizes == (8,)
    assert parse_ring("Z_2^3").sizes == (8,)
    assert parse_ring("Z_{2^2} x Z_9").sizes == (4, 9)
    assert parse_ring("Z_2 x Z_3").sizes == (2, 6 // 2)


def test_parse_ring_rejects_non_prime_power():
    with pytest.raises(ValueError, match="product of chain rings"):
        parse_ring("Z_6")
    with pytest.raises(ValueError):
        parse_ring("Z_1")
    with pytest.raises(ValueError):
        parse_ring("Q_8")


def test_chain_ring_invariants():
    with pytest.raises(ValueError):
        ChainRing(6, 1)
    with pytest.raises(ValueError):
        ChainRing(2, 0)
    assert ChainRing(3, 2).size == 9
    assert ChainRing(3, 2).residue_field_size == 3


def test_valuation_z8():
    z8 = ChainRing(2, 3)
    assert z8.valuation(4) == 2
    assert z8.valuation(0) == 3
    assert z8.valuation(6) == 1
    assert z8.valuation(1) == 0


def test_units_z4():
    z4 = parse_ring("Z_4")
    assert z4.is_unit(z4.from_int(3))
    assert not z4.is_unit(z4.from_int(2))


def test_crt_zero_divisors_z6():
    z6 = parse_ring("Z_2 x Z_3")
    two, three = z6.from_int(2), z6.from_int(3)
    assert two == (0, 2) and three == (1, 0)
    assert z6.mul(two, three) == z6.zero


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1),
                                 (7, 1), (2, 4), (2, 5), (2, 6), (3, 3)])
def test_every_element_is_unit_times_alpha_power(p, k):
    # exhaustive for p^k <= 64
    ring = chain_ring(p, k)
    cr = ring.factors[0]
    units = [u for u in range(cr.size) if cr.is_unit(u)]
    for r in range(1, cr.size):
        t = cr.valuation(r)
        assert any((u * p**t) % cr.size == r for u in units)


def test_ideal_sizes_and_heights():
    ring = parse_ring("Z_8")
    cr = ring.factors[0]
    for e in range(cr.k + 1):
        ideal = ring.ideal_generated_by([(pow(cr.p, e, cr.size) if e < cr.k else 0,)])
        assert ring.ideal_size(ideal) == cr.p ** (cr.k - e)


@pytest.mark.parametrize(
    "spec", ["Z_2 x Z_3", "Z_{2^2} x Z_3", "Z_2 x Z_9 x Z_5"]
)
def test_crt_agrees_with_integer_arithmetic(spec):
    ring = parse_ring(spec)
    n = ring.size
    assert n <= 100
    for a, b in itertools.product(range(n), repeat=2):
        ea, eb = ring.from_int(a), ring.from_int(b)
        assert ring.to_int(ring.add(ea, eb)) == (a + b) % n
        assert ring.to_int(ring.mul(ea, eb)) == (a * b) % n
        assert ring.to_int(ring.neg(ea)) == (-a) % n
    assert sorted(ring.to_int(x) for x in ring.elements()) == list(range(n))


def test_to_int_needs_coprime_sizes():
    ring = product_ring((2, 1), (2, 1))
    with pytest.raises(ValueError, match="coprime"):
        ring.to_int((1, 0))


def test_element_shape_checked():
    z4 = parse_ring("Z_4")
    with pytest.raises(ValueError):
        z4.add((1, 2), (1,))


def test_ideal_lattice_shapes():
    from latroids.lattices import ideal_lattice, is_complemented_lattice

    chain = ideal_lattice(parse_ring("Z_8"))
    assert chain.size == 4
    assert not is_complemented_lattice(chain)
    # containment chain: heights 0..3
    assert chain.is_graded and chain.hgt(chain.top) == 3

    grid = ideal_lattice(parse_ring("Z_2 x Z_3"))
    assert grid.size == 4
    assert grid.is_graded and grid.hgt(grid.top) == 2

    two = ideal_lattice(parse_ring("Z_2"))
    assert two.size == 2


def test_intlog():
    assert intlog(2, 8) == 3
    assert intlog(3, 1) == 0
    with pytest.raises(ValueError):
        intlog(2, 12)
