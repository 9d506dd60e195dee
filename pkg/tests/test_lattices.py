import itertools

import numpy as np
import pytest

from latroids.codes import full_space, span_from_ints
from latroids.errors import NotALatticeError, NotGradedError
from latroids.lattices import (
    atoms_join_check,
    boolean_lattice,
    build_lattice,
    chain_support_lattice,
    dual,
    grid_lattice,
    ideal_lattice,
    interval,
    is_complemented_lattice,
    is_distributive_lattice,
    is_modular_lattice,
    is_relatively_complemented_lattice,
    predicates,
    product,
    submodule_lattice,
    subspace_lattice,
)
from latroids.rings import parse_ring


def chain(n):
    return build_lattice(range(n), lambda a, b: a <= b)


def corpus():
    z8 = parse_ring("Z_8")
    z6 = parse_ring("Z_2 x Z_3")
    return [
        boolean_lattice(3),
        boolean_lattice(4),
        subspace_lattice(2, 2),
        subspace_lattice(2, 3),
        subspace_lattice(3, 2),
        ideal_lattice(z8),
        ideal_lattice(z6),
        chain_support_lattice(parse_ring("Z_4"), 2),
        submodule_lattice(full_space(parse_ring("Z_4"), 2)),
        build_lattice(
            [d for d in range(1, 13) if 12 % d == 0], lambda a, b: b % a == 0
        ),
        product(chain(2), chain(3)),
    ]


def test_boolean_lattice_basics():
    b3 = boolean_lattice(3)
    assert b3.size == 8
    assert b3.is_graded
    assert all(b3.hgt(i) == len(b3.labels[i]) for i in range(8))
    flags = predicates(b3)
    assert flags.is_modular and flags.is_distributive
    assert flags.is_complemented and flags.is_relatively_complemented


def test_boolean_lattice_zero():
    assert boolean_lattice(0).size == 1


def test_subspace_lattice_counts():
    assert subspace_lattice(2, 2).size == 5
    assert subspace_lattice(3, 2).size == 6
    assert subspace_lattice(2, 3).size == 16


def test_subspace_lattice_prime_only():
    with pytest.raises(ValueError, match="prime"):
        subspace_lattice(4, 2)


def test_subspace_lattice_f2_3_flags():
    flags = predicates(subspace_lattice(2, 3))
    assert flags.is_modular and flags.is_complemented
    assert not flags.is_distributive
    assert flags.is_relatively_complemented


def test_chain_not_complemented():
    lat = ideal_lattice(parse_ring("Z_8"))
    assert is_modular_lattice(lat)
    assert not is_complemented_lattice(lat)


def test_divisor_lattice_distributive():
    divs = build_lattice(
        [d for d in range(1, 13) if 12 % d == 0], lambda a, b: b % a == 0
    )
    assert is_distributive_lattice(divs)
    assert is_modular_lattice(divs)


def test_not_a_lattice_reported():
    # two incomparable tops: no join for the two atoms
    labels = ["a", "b", "c", "d"]
    order = {("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")}

    def leq(x, y):
        return x == y or (x, y) in order

    with pytest.raises(NotALatticeError) as err:
        build_lattice(labels, leq)
    assert err.value.pair is not None


def test_partial_order_validation():
    with pytest.raises(ValueError, match="antisymmetric"):
        build_lattice([0, 1], lambda a, b: True)


def test_interval_and_dual():
    b3 = boolean_lattice(3)
    assert interval(b3, b3.bottom, b3.top) == b3
    assert dual(dual(b3)) == b3
    with pytest.raises(ValueError):
        interval(b3, b3.top, b3.bottom)
    mid = b3.index[frozenset({0})]
    sub = interval(b3, mid, b3.top)
    assert sub.size == 4  # supersets of {0}


def test_product_of_chains_is_grid():
    p = product(chain(2), chain(2))
    assert p.size == 4
    assert p.is_graded and p.hgt(p.top) == 2
    assert is_distributive_lattice(p)


def test_grid_and_chain_support_lattice():
    g = chain_support_lattice(parse_ring("Z_4"), 2)
    assert g.size == 9
    assert g.labels[0] == (0, 0) and g.labels[-1] == (2, 2)
    z6 = parse_ring("Z_2 x Z_3")
    g6 = chain_support_lattice(z6, 2)
    assert g6.size == 16  # {0,1}^4


def test_submodule_lattice_z4_2():
    lat = submodule_lattice(full_space(parse_ring("Z_4"), 2))
    assert lat.size == 15
    assert lat.is_graded
    assert is_modular_lattice(lat)
    assert not is_complemented_lattice(lat)


def test_atoms_join_check():
    assert atoms_join_check(boolean_lattice(4)).ok
    assert atoms_join_check(subspace_lattice(3, 2)).ok
    rep = atoms_join_check(chain(3))
    assert not rep.ok  # top of a 3-chain is not a join of atoms


def test_modular_iff_graded_with_modular_height():
    for lat in corpus():
        claim = is_modular_lattice(lat)
        if not lat.is_graded:
            assert not claim
            continue
        law = all(
            lat.hgt(a) + lat.hgt(b)
            == lat.hgt(int(lat.join[a, b])) + lat.hgt(int(lat.meet[a, b]))
            for a, b in lat.pairs()
        )
        assert claim == law


def test_distributive_implies_modular_on_corpus():
    for lat in corpus():
        if is_distributive_lattice(lat):
            assert is_modular_lattice(lat)


def test_atoms_below_joins_in_distributive_lattices():
    for lat in corpus():
        if not is_distributive_lattice(lat):
            continue
        for a in lat.atoms:
            for l1, l2 in lat.pairs():
                if lat.leq[a, lat.join[l1, l2]]:
                    assert lat.leq[a, l1] or lat.leq[a, l2]


def test_complemented_modular_implies_relatively_complemented():
    for lat in corpus():
        if is_complemented_lattice(lat) and is_modular_lattice(lat):
            assert is_relatively_complemented_lattice(lat)


def test_height_errors_when_not_graded():
    # a 5-element non-graded lattice: bottom, a < c, b, top with b covering bottom
    labels = ["0", "a", "b", "c", "1"]
    order = {
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "1"),
        ("a", "c"), ("a", "1"), ("b", "1"), ("c", "1"),
    }
    lat = build_lattice(labels, lambda x, y: x == y or (x, y) in order)
    assert not lat.is_graded
    with pytest.raises(NotGradedError):
        lat.hgt(0)


def test_labels_must_be_distinct():
    with pytest.raises(ValueError, match="distinct"):
        build_lattice([0, 0], lambda a, b: True)


def test_covers_and_atoms():
    b3 = boolean_lattice(3)
    assert len(b3.atoms) == 3
    strict_pairs = [(a, b) for a, b in b3.pairs() if b3.covers[a, b]]
    assert all(len(b3.labels[b]) == len(b3.labels[a]) + 1 for a, b in strict_pairs)
