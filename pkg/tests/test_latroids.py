import itertools
import random

import pytest

from latroids.codes import full_space, span_from_ints
from latroids.core import (
    Latroid,
    axioms_B,
    axioms_C,
    axioms_I,
    bases,
    circuit_chain_length,
    circuits,
    closure,
    collapse_scalars,
    direct_sum,
    dual_latroid,
    flats,
    free_latroid,
    generalized_weight,
    hyperplanes,
    independents,
    minimal_feasible_lengths,
    rank_from_bases,
    rank_from_circuits,
    rank_from_independents,
    restrict,
    scale_latroid,
    uniform_latroid,
    validate_latroid,
)
from latroids.errors import NotGradedError, ReconstructionError
from latroids.lattices import boolean_lattice, build_lattice, ideal_lattice, subspace_lattice
from latroids.rings import parse_ring

B3 = boolean_lattice(3)
B4 = boolean_lattice(4)
PG23 = subspace_lattice(2, 3)


def crypto_corpus():
    """Latroids under the height function on complemented modular lattices."""
    out = [
        free_latroid(B3),
        free_latroid(PG23),
        uniform_latroid(B3, 1),
        uniform_latroid(B3, 2),
        uniform_latroid(B4, 1),
        uniform_latroid(B4, 2),
        uniform_latroid(B4, 3),
        uniform_latroid(PG23, 1),
        uniform_latroid(PG23, 2),
        uniform_latroid(subspace_lattice(3, 2), 1),
    ]
    from latroids.code_latroids import block_matroid

    f2 = parse_ring("Z_2")
    out.append(block_matroid(span_from_ints(f2, 3, [[1, 1, 1]])))
    out.append(block_matroid(span_from_ints(f2, 4, [[1, 1, 0, 0], [0, 0, 1, 1]])))
    out.append(block_matroid(span_from_ints(f2, 4, [[1, 1, 1, 0], [0, 1, 1, 1]])))
    return out


def test_free_latroid_valid_and_trivial():
    lt = free_latroid(B3)
    assert validate_latroid(lt).ok
    assert set(independents(lt)) == set(range(B3.size))
    assert bases(lt) == (B3.top,)
    assert circuits(lt) == ()


def test_free_needs_graded_or_length():
    labels = ["0", "a", "b", "c", "1"]
    order = {
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "1"),
        ("a", "c"), ("a", "1"), ("b", "1"), ("c", "1"),
    }
    lat = build_lattice(labels, lambda x, y: x == y or (x, y) in order)
    with pytest.raises(NotGradedError):
        free_latroid(lat)


def test_uniform_latroid_cap():
    lt = uniform_latroid(B3, 2)
    assert lt.rank[B3.top] == (2,)
    assert lt.rank[B3.index[frozenset({0, 1})]] == (2,)
    with pytest.raises(ValueError):
        uniform_latroid(B3, 0)


def test_uniform_with_full_cap_is_free():
    lt = uniform_latroid(B3, 3)
    assert lt.rank == lt.length


def test_one_element_lattice_free():
    lat = build_lattice([0], lambda a, b: True)
    lt = free_latroid(lat)
    assert lt.rank == ((0,),)


def test_validate_rejects_negative_top():
    bad = Latroid.from_functions(B3, lambda s: -len(s), lambda s: len(s))
    rep = validate_latroid(bad)
    assert not rep.ok
    assert rep.first_failure().name == "L4_rank_bounded_increasing"


def test_z8_ideal_latroids():
    # the chain of ideals of Z_8 with length |I| - 1 and two different ranks
    z8 = parse_ring("Z_8")
    lat = ideal_lattice(z8)
    sizes = {lab: z8.ideal_size(lab) for lab in lat.labels}
    halves = Latroid.from_functions(lat, lambda i: sizes[i] // 2, lambda i: sizes[i] - 1)
    lengths = Latroid.from_functions(
        lat,
        lambda i: sum(f.k - e for f, e in zip(z8.factors, i.exponents)),
        lambda i: sizes[i] - 1,
    )
    assert validate_latroid(halves).ok
    assert validate_latroid(lengths).ok
    # same independents, different top rank (4 against 3)
    assert independents(halves) == independents(lengths)
    assert {lat.labels[i].exponents for i in independents(halves)} == {(3,), (2,)}
    assert halves.rank[lat.top] == (4,)
    assert lengths.rank[lat.top] == (3,)


def test_restrict_full_is_identity():
    lt = free_latroid(B3)
    assert restrict(lt, B3.bottom, B3.top) == lt


def test_restrict_shifts_to_zero():
    lt = uniform_latroid(B4, 2)
    a = B4.index[frozenset({0})]
    sub = restrict(lt, a, B4.top)
    assert validate_latroid(sub).ok
    assert sub.rank[sub.lattice.bottom] == (0,)


def test_direct_sum_of_free_is_free():
    lt = direct_sum(free_latroid(B3), free_latroid(boolean_lattice(2)))
    assert lt.rank == lt.length
    assert validate_latroid(lt).ok


def test_direct_sum_checks_scalar_dim():
    a = free_latroid(B3)
    b = collapse_scalars(direct_sum(a, a))
    assert b.udim == 1
    with pytest.raises(ValueError):
        direct_sum(a, Latroid.from_functions(B3, lambda s: (0, 0), lambda s: (len(s), len(s)), udim=2))


def test_dual_involution_on_random_code_latroids():
    from latroids.code_latroids import chain_support_latroid

    rng = random.Random(7)
    z4 = parse_ring("Z_4")
    for _ in range(10):
        rows = [[rng.randrange(4) for _ in range(2)] for _ in range(2)]
        lt = chain_support_latroid(span_from_ints(z4, 2, rows), validate=False)
        dd = dual_latroid(dual_latroid(lt, validate=False), validate=False)
        assert dd == lt


def test_dual_identities():
    lt = uniform_latroid(B4, 2)
    dl = dual_latroid(lt)
    assert validate_latroid(dl).ok
    top_len = lt.length[B4.top]
    for i in range(B4.size):
        assert dl.length[i] == tuple(a - b for a, b in zip(top_len, lt.length[i]))
    # interval duality: restrict-then-dualize = dualize-then-restrict-swapped
    a = B4.index[frozenset({0})]
    b = B4.index[frozenset({0, 1, 2})]
    left = dual_latroid(restrict(lt, a, b))
    right = restrict(dual_latroid(lt), b, a)
    assert left.rank == right.rank and left.length == right.length


def test_independents_downward_closed_on_corpus():
    for lt in crypto_corpus():
        ind = set(independents(lt))
        lat = lt.lattice
        for i in ind:
            for j in range(lat.size):
                if lat.lt(j, i):
                    assert j in ind


def test_bases_have_equal_height_on_corpus():
    for lt in crypto_corpus():
        hs = {lt.lattice.hgt(b) for b in bases(lt)}
        assert len(hs) == 1


def test_block_matroid_circuit_of_repetition_pair():
    from latroids.code_latroids import block_matroid

    f2 = parse_ring("Z_2")
    lt = block_matroid(span_from_ints(f2, 2, [[1, 1]]))
    assert [lt.lattice.labels[c] for c in circuits(lt)] == [frozenset({0, 1})]


def test_axiom_systems_on_corpus():
    for lt in crypto_corpus():
        lat = lt.lattice
        assert axioms_I(lat, independents(lt)).ok
        assert axioms_B(lat, bases(lt)).ok
        assert axioms_C(lat, circuits(lt)).ok


def test_axioms_reject_bad_candidates():
    # nested circuits violate the antichain axiom
    lat = B3
    c_nested = [lat.index[frozenset({0})], lat.index[frozenset({0, 1})]]
    rep = axioms_C(lat, c_nested)
    assert not rep.ok
    assert any(c.name == "C2_antichain" and not c.ok for c in rep.checks)
    # independents missing the bottom
    rep = axioms_I(lat, [lat.index[frozenset({0})]])
    assert not rep.ok
    # empty bases
    rep = axioms_B(lat, [])
    assert not rep.ok


def test_axioms_require_hypotheses():
    chain3 = build_lattice(range(3), lambda a, b: a <= b)
    with pytest.raises(ValueError):
        axioms_I(chain3, [0])


def test_reconstruction_roundtrips_on_corpus():
    for lt in crypto_corpus():
        lat = lt.lattice
        assert rank_from_independents(lat, independents(lt)).rank == lt.rank
        assert rank_from_bases(lat, bases(lt)).rank == lt.rank
        assert rank_from_circuits(lat, circuits(lt)).rank == lt.rank


def test_reconstructions_agree_pairwise():
    for lt in crypto_corpus():
        lat = lt.lattice
        a = rank_from_independents(lat, independents(lt)).rank
        b = rank_from_bases(lat, bases(lt)).rank
        c = rank_from_circuits(lat, circuits(lt)).rank
        assert a == b == c


def test_reconstruction_rejects_violations():
    with pytest.raises(ReconstructionError):
        rank_from_circuits(B3, [B3.bottom])


def test_kappa_needs_longest_chain_not_greedy():
    # rank-1 uniform on B_4: circuits are the six pairs; a stuck chain of
    # two disjoint pairs has length 2 but maximal chains have length 3
    lt = uniform_latroid(B4, 1)
    cs = circuits(lt)
    assert len(cs) == 6
    assert circuit_chain_length(B4, cs, B4.top) == 3
    assert rank_from_circuits(B4, cs).rank == lt.rank


def test_all_maximal_circuit_chains_have_equal_length():
    # brute-force refinement check against the memoized longest chain
    for lt in (uniform_latroid(B4, 1), uniform_latroid(B3, 1), uniform_latroid(PG23, 2)):
        lat = lt.lattice
        cs = circuits(lt)
        for l in range(lat.size):
            inside = [c for c in cs if lat.leq[c, l]]
            maximal_lengths = set()

            def extend(seq, join):
                grew = False
                for c in inside:
                    if not lat.leq[c, join]:
                        extend(seq + [c], int(lat.join[join, c]))
                        grew = True
                if not grew and not _refinable(lat, inside, seq):
                    maximal_lengths.add(len(seq))

            extend([], lat.bottom)
            if inside:
                assert maximal_lengths == {circuit_chain_length(lat, cs, l)}


def _refinable(lat, inside, seq):
    """Can a circuit be inserted anywhere keeping joins strictly rising?"""
    for pos in range(len(seq) + 1):
        for c in inside:
            trial = seq[:pos] + [c] + seq[pos:]
            join = lat.bottom
            ok = True
            for x in trial:
                nxt = int(lat.join[join, x])
                if nxt == join:
                    ok = False
                    break
                join = nxt
            if ok and len(trial) > len(seq):
                return True
    return False


def test_lemma_atoms_join_under_rank_stability():
    # if joining every atom below L2 keeps the rank, joining L2 keeps it
    for lt in crypto_corpus():
        lat = lt.lattice
        for l1, l2 in lat.pairs():
            atoms_below = [a for a in lat.atoms if lat.leq[a, l2]]
            if all(
                lt.rank[int(lat.join[l1, a])] == lt.rank[l1] for a in atoms_below
            ):
                assert lt.rank[int(lat.join[l1, l2])] == lt.rank[l1]


def test_closure_and_flats():
    free = free_latroid(B3)
    assert all(closure(free, l) == l for l in range(B3.size))
    assert closure(free, B3.top) == B3.top
    lt = uniform_latroid(B3, 1)
    # rank-1 uniform: any nonempty set closes to the whole ground set
    one = B3.index[frozenset({0})]
    assert closure(lt, one) == B3.top
    assert set(flats(lt)) == {B3.bottom, B3.top}
    assert hyperplanes(lt) == (B3.bottom,)


def test_closure_on_block_matroid():
    from latroids.code_latroids import block_matroid

    f2 = parse_ring("Z_2")
    lt = block_matroid(span_from_ints(f2, 2, [[1, 1]]))
    lat = lt.lattice
    assert closure(lt, lat.index[frozenset({0})]) == lat.index[frozenset({0})]


def test_generalized_weight_conventions():
    free = free_latroid(B3)
    assert generalized_weight(free, 1) == 0  # infeasible, convention
    assert generalized_weight(free, 0) == 0
    lt = uniform_latroid(B4, 2)
    # nullity |L| - 2 >= 1 first at |L| = 3
    assert generalized_weight(lt, 1) == 3
    assert generalized_weight(lt, 2) == 4


def test_generalized_weight_udim_guard():
    two = Latroid.from_functions(
        B3, lambda s: (0, 0), lambda s: (len(s), len(s)), udim=2
    )
    with pytest.raises(ValueError):
        generalized_weight(two, 1)
    fronts = minimal_feasible_lengths(two, (1, 1))
    assert fronts == ((1, 1),)


def test_weight_monotone_and_strict_step():
    # d_b <= d_a for b <= a; strict when some element attains nullity b
    for lt in crypto_corpus():
        if lt.udim != 1:
            continue
        nullities = {
            (lt.length[i][0] - lt.rank[i][0]) for i in range(lt.lattice.size)
        }
        top_nullity = max(nullities)
        for a in range(1, top_nullity + 1):
            da = generalized_weight(lt, a)
            db = generalized_weight(lt, a - 1)
            assert db <= da
            if a - 1 in nullities:
                assert db < da


def test_scale_latroid():
    lt = free_latroid(B3)
    doubled = scale_latroid(lt, 2)
    assert doubled.length[B3.top] == (6,)
    with pytest.raises(ValueError):
        scale_latroid(lt, 0)
