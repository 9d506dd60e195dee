import pytest

from latroids.codes import enumerate_submodules, full_space, span_from_ints
from latroids.rings import parse_ring
from latroids.supports import (
    ChainSupport,
    HammingSupport,
    ProductSupport,
    TableSupport,
    modular_function_on_rectangulars,
    module_support_lattice_check,
    split_support,
    support_from_unit_table,
    tau_support,
    validate_modular,
    validate_support,
)

Z4 = parse_ring("Z_4")
Z8 = parse_ring("Z_8")
Z9 = parse_ring("Z_9")
Z6 = parse_ring("Z_2 x Z_3")
F2 = parse_ring("Z_2")
F3 = parse_ring("Z_3")

LEE_TABLE = {(0,): (0,), (1,): (1,), (2,): (2,), (3,): (1,)}


def z6_paper_support(n):
    # per coordinate: (Hamming on the Z_3 part, Hamming on the Z_2 part)
    return support_from_unit_table(
        Z6, n,
        {(0, 0): (0, 0), (1, 1): (1, 1), (0, 2): (1, 0), (1, 0): (0, 1),
         (0, 1): (1, 0), (1, 2): (1, 1)},
    )


def test_chain_support_values_z4():
    s = ChainSupport(Z4, 1)
    values = {a[0]: s((a,))[0] for a in Z4.elements()}
    assert values == {0: 0, 1: 2, 2: 1, 3: 2}


def test_supports_vanish_only_at_zero():
    for s in (ChainSupport(Z8, 1), HammingSupport(Z6, 2), ChainSupport(Z6, 2)):
        zero = s.ring.zero_vector(s.n)
        assert s(zero) == (0,) * s.u
        assert validate_support(s).ok


def test_z6_paper_support_values():
    s = z6_paper_support(1)
    assert s((Z6.from_int(1),)) == (1, 1)
    assert s((Z6.from_int(2),)) == (1, 0)
    assert s((Z6.from_int(3),)) == (0, 1)


def test_weights():
    s = ChainSupport(Z4, 2)
    assert s.weight(Z4.vector_from_ints([1, 2])) == 3
    assert s.weight(Z4.zero_vector(2)) == 0
    h = HammingSupport(F2, 3)
    assert h.weight(F2.vector_from_ints([1, 1, 0])) == 2


def test_min_max_weight():
    s = ChainSupport(Z4, 2)
    c = span_from_ints(Z4, 2, [[1, 2]])
    assert s.min_max_weight(c) == (1, 3)
    with pytest.raises(ValueError):
        s.min_max_weight(span_from_ints(Z4, 2, []))


def test_code_weight_is_set_support_norm():
    s = ChainSupport(Z4, 2)
    c = span_from_ints(Z4, 2, [[1, 2]])
    assert s.of_set(c.codewords) == (2, 1)
    assert s.code_weight(c) == 3


def test_lee_is_rejected_at_axiom2_with_witness():
    with pytest.raises(ValueError, match="axiom2"):
        support_from_unit_table(Z4, 1, LEE_TABLE)
    raw = support_from_unit_table(Z4, 1, LEE_TABLE, validate=False)
    rep = validate_support(raw)
    assert not rep.ok
    bad = rep.first_failure()
    assert bad.name == "axiom2_scalar_monotone"
    assert bad.detail == "r=(2,), v=((1,),)"


@pytest.mark.parametrize("ring", [Z4, Z8, Z9])
def test_chain_supports_modular(ring):
    s = ChainSupport(ring, 1)
    assert validate_support(s).ok
    assert validate_modular(s).ok


def test_chain_support_modular_two_coordinates():
    assert validate_modular(ChainSupport(Z4, 2)).ok


def test_tau_is_support_but_not_modular():
    for ring in (F2, F3):
        t = tau_support(ring, 2)
        assert validate_support(t).ok
        assert not validate_modular(t).ok


def test_hamming_modular_over_fields_not_over_z6():
    assert validate_modular(HammingSupport(F3, 2)).ok
    assert not validate_modular(HammingSupport(Z6, 1)).ok


def test_split_z6_paper_support():
    parts, perm = split_support(z6_paper_support(2))
    assert sorted(perm) == [0, 1, 2, 3]
    assert parts[0].same_values(HammingSupport(Z6.factor_ring(0), 2))
    assert parts[1].same_values(HammingSupport(Z6.factor_ring(1), 2))


def test_split_chain_support_on_product():
    parts, perm = split_support(ChainSupport(Z6, 2))
    assert parts[0].same_values(ChainSupport(Z6.factor_ring(0), 2))
    assert parts[1].same_values(ChainSupport(Z6.factor_ring(1), 2))
    # recombination through the permutation reproduces the support
    s = ChainSupport(Z6, 2)
    for v in Z6.vectors(2):
        combined = []
        for i, part in enumerate(parts):
            combined.extend(part(Z6.project_vector(v, i)))
        assert tuple(s(v)[j] for j in perm) == tuple(combined)


def test_split_single_factor_is_identity():
    parts, perm = split_support(ChainSupport(Z4, 1))
    assert len(parts) == 1 and perm == (0,)
    assert parts[0].same_values(ChainSupport(Z4, 1))


def test_split_requires_modular():
    with pytest.raises(ValueError, match="modular"):
        split_support(HammingSupport(Z6, 1))


def test_standard_detection():
    assert ChainSupport(Z4, 2).is_standard
    assert not tau_support(F2, 2).is_standard
    parts, _ = split_support(z6_paper_support(1))
    assert all(p.is_standard for p in parts)


@pytest.mark.parametrize("ring,n", [(Z4, 2), (Z8, 1), (Z9, 2)])
def test_support_lattice_laws(ring, n):
    # join/meet of supports match sum/intersection on rectangular modules;
    # the join half holds for arbitrary submodules, the meet half does not
    # (0 x (2) against <(2,2)> in Z_4^2 breaks it), because only rectangular
    # modules contain axis vectors attaining their coordinatewise suprema
    from latroids.codes import Code, all_rectangular_modules, rect_members

    s = ChainSupport(ring, n)
    rect_codes = [
        Code(ring, n, (), frozenset(rect_members(ring, r)))
        for r in all_rectangular_modules(ring, n)
    ]
    assert module_support_lattice_check(s, rect_codes).ok

    subs = enumerate_submodules(full_space(ring, n))
    rep = module_support_lattice_check(s, subs)
    by_name = {c.name: c.ok for c in rep.checks}
    assert by_name["support_of_sum_is_join"]
    if (ring, n) == (Z4, 2):
        assert not by_name["support_of_intersection_is_meet"]


def test_modular_function_on_rectangulars_positive():
    for s in (ChainSupport(Z4, 2), ChainSupport(Z6, 1), z6_paper_support(1)):
        assert modular_function_on_rectangulars(s).ok


def test_z6_hamming_modular_function_negative_control():
    rep = modular_function_on_rectangulars(HammingSupport(Z6, 1))
    assert not rep.ok
    bad = rep.first_failure()
    assert bad.name == "modular_function"
    assert "1+1" in bad.detail  # supp(M1)+supp(M2) = 2 against 1


def test_table_support_must_cover_domain():
    with pytest.raises(ValueError, match="cover"):
        TableSupport(Z4, 1, {(Z4.from_int(0),): (0,)})


def test_product_support_needs_single_coordinate_parts():
    with pytest.raises(ValueError):
        ProductSupport(Z4, [ChainSupport(Z4, 2)])
