import pytest

from repvar.acceptance import (
    FOUR_VERTEX_GENERIC_SOCLE,
    FOUR_VERTEX_S,
    ZIGZAG_S,
    ZIGZAG_SOCLE,
    ZIGZAG_T,
    ZIGZAG_T_SOCLE,
    brute_force_bounds,
)
from repvar.algebra import local_algebra
from repvar.components import (
    LayeredPair,
    full_loewy_report,
    generic_socle_layering,
    is_component_layering,
    kronecker_schur_hint,
    local_components,
    minimal_pairs,
    minimal_radsoc_candidates,
    radsoc_candidates,
    schur_root,
    schur_root_oracle,
    simple_summand_check,
)
from repvar.layers import SemisimpleSequence, pair_leq
from repvar.repmod import direct_sum, path_nullity, radical_layering, radsoc_pair, subfactor, zero_module
from repvar.skeleta import sample_module

from test_repmod import uniserial

loc = SemisimpleSequence.from_local


def test_component_layering_examples():
    assert is_component_layering(3, 2, loc([2, 2, 6]))
    assert not is_component_layering(3, 2, loc([1, 2, 7]))
    assert is_component_layering(2, 2, (2, 2, 2))
    with pytest.raises(ValueError):
        is_component_layering(2, 2, (1, 1, 1))
    with pytest.raises(ValueError):
        is_component_layering(1, 2, (2, 2, 2))
    with pytest.raises(ValueError):
        is_component_layering(2, 2, (2, 2))


def test_local_components_lists():
    comps = local_components(3, 2, 10)
    assert len(comps) == 17
    assert all(c.generic_socle == c.S.reverse() and c.trials_used == 0 for c in comps)
    (only,) = local_components(2, 3, 3)
    assert only.S == loc([1, 1, 1, 0])
    six = [c.S.layer_dims() for c in local_components(2, 2, 6)]
    assert (2, 2, 2) in six and sorted(six) == brute_force_bounds(2, 2, 6)


def test_one_loop_is_irreducible():
    (only,) = local_components(1, 2, 7, verify=True)
    assert only.S == loc([3, 2, 2]) and only.generic_socle == only.S


def test_verified_components_agree():
    comps = local_components(2, 2, 5, verify=True)
    assert [c.S for c in comps] == [c.S for c in local_components(2, 2, 5)]
    assert all(c.generic_socle == c.S.reverse() and c.trials_used >= 1 for c in comps)


def test_generic_socle_examples(four_vertex):
    alg = local_algebra(2, 2)
    assert generic_socle_layering(alg, loc([1, 2, 2])) == loc([2, 2, 1])
    assert generic_socle_layering(alg, loc([4, 0, 0])) == loc([4, 0, 0])
    assert generic_socle_layering(four_vertex, FOUR_VERTEX_S) == FOUR_VERTEX_GENERIC_SOCLE
    _, used = generic_socle_layering(alg, loc([2, 2, 2]), return_trials=True)
    assert used == 1
    with pytest.raises(ValueError):
        generic_socle_layering(alg, loc([2, 2, 2]), trials=0)


def test_seed_determinism(four_vertex):
    a = generic_socle_layering(four_vertex, FOUR_VERTEX_S, seed=17)
    b = generic_socle_layering(four_vertex, FOUR_VERTEX_S, seed=17)
    assert a == b


def test_minimal_candidates_local_match_components():
    for r, L, d in ((2, 2, 5), (3, 1, 4), (2, 3, 7)):
        got = {pair.rad for pair in minimal_radsoc_candidates(local_algebra(r, L), (d,))}
        assert got == {c.S for c in local_components(r, L, d)}


def test_minimal_candidates_trivial():
    (pair,) = minimal_radsoc_candidates(local_algebra(2, 2), (1,))
    assert pair == LayeredPair(loc([1, 0, 0]), loc([1, 0, 0]))


def test_four_vertex_sampled_pair_is_minimal(four_vertex):
    pairs = minimal_radsoc_candidates(four_vertex, (2, 2, 4, 1))
    assert LayeredPair(FOUR_VERTEX_S, FOUR_VERTEX_GENERIC_SOCLE) in pairs


def test_zigzag_pairs(zigzag):
    assert generic_socle_layering(zigzag, ZIGZAG_S) == ZIGZAG_SOCLE
    assert generic_socle_layering(zigzag, ZIGZAG_T) == ZIGZAG_T_SOCLE
    assert pair_leq((ZIGZAG_S, ZIGZAG_SOCLE), (ZIGZAG_T, ZIGZAG_T_SOCLE))
    delta = zigzag.quiver.path(("delta",))
    assert path_nullity(sample_module(zigzag, ZIGZAG_S, 0), delta) == 4
    assert path_nullity(sample_module(zigzag, ZIGZAG_T, 0), delta) == 3
    # the candidate set only sees the uniserial pair
    cands = minimal_radsoc_candidates(zigzag, (1, 1, 1, 1))
    assert cands == [LayeredPair(ZIGZAG_S, ZIGZAG_SOCLE)]


def test_minimal_pairs_order():
    a = LayeredPair(loc([1, 1]), loc([1, 1]))
    b = LayeredPair(loc([2, 0]), loc([1, 1]))
    c = LayeredPair(loc([1, 1]), loc([2, 0]))
    assert minimal_pairs([b, a, c]) == [a]


def test_candidate_rad_entries_are_all_sequences():
    cands = radsoc_candidates(local_algebra(2, 1), (3,))
    assert [c.rad for c in cands] == [loc([1, 2]), loc([2, 1]), loc([3, 0])]


@pytest.mark.parametrize(
    "r,a,b,expected",
    [(2, 2, 2, False), (3, 2, 2, True), (2, 1, 0, True), (5, 0, 1, True), (2, 0, 2, False),
     (2, 1, 2, True), (2, 3, 2, True), (2, 1, 3, False), (3, 1, 3, True), (3, 3, 8, True), (3, 2, 6, False),
     (1, 1, 1, True), (1, 2, 2, False)],
)
def test_schur_root_values(r, a, b, expected):
    assert schur_root(r, a, b) is expected


def test_schur_root_against_oracle():
    for r, a, b in ((2, 1, 3), (2, 2, 3), (3, 3, 8), (3, 2, 6), (4, 3, 5)):
        assert schur_root(r, a, b) == schur_root_oracle(r, a, b)


def test_schur_root_rejects_zero():
    with pytest.raises(ValueError):
        schur_root(2, 0, 0)


def test_schur_hints():
    assert kronecker_schur_hint(3, loc([2, 2, 6])) == 1
    assert kronecker_schur_hint(2, loc([2, 2, 2])) is None
    assert kronecker_schur_hint(2, (1, 2, 2)) == 1


def test_simple_summand_check_examples():
    U = uniserial(2, 2)
    assert simple_summand_check(U) == (False, False, None)
    S = zero_module(local_algebra(2, 2), (1,))
    assert simple_summand_check(direct_sum(S, U)) == (True, True, 0)
    M = sample_module(local_algebra(2, 2), loc([4, 1, 1]), seed=2)
    assert radical_layering(M) == loc([4, 1, 1])
    assert simple_summand_check(M) == (True, True, 0)


def test_full_loewy_reports():
    report = dict(full_loewy_report(2, 2, 6))
    assert report[loc([2, 2, 2])] and all(report.values())
    with pytest.raises(ValueError):
        full_loewy_report(2, 2, 3)


@pytest.mark.parametrize(
    "r,dims",
    [(2, (1, 2, 3, 2)), (3, (2, 3, 2, 1)), (2, (2, 2, 2, 2))],
)
def test_subfactors_of_generic_modules(r, dims):
    L = len(dims) - 1
    G = sample_module(local_algebra(r, L), loc(dims), seed=21)
    for rho in range(L + 1):
        for tau in range(rho + 1, L + 1):
            part = loc(dims[rho : tau + 1])
            expected = (part, generic_socle_layering(local_algebra(r, tau - rho), part, seed=99))
            assert radsoc_pair(subfactor(G, rho, tau)) == expected


def test_subfactors_on_four_vertex(four_vertex):
    G = sample_module(four_vertex, FOUR_VERTEX_S, seed=8)
    for rho, tau in ((0, 1), (1, 3), (2, 3), (0, 2)):
        part = SemisimpleSequence(FOUR_VERTEX_S.layers[rho : tau + 1])
        alg = four_vertex.with_truncation(tau - rho)
        assert radsoc_pair(subfactor(G, rho, tau)) == (part, generic_socle_layering(alg, part, seed=5))


def test_all_skeleta_gives_the_same_generic_value(four_vertex):
    assert generic_socle_layering(four_vertex, FOUR_VERTEX_S, all_skeleta=True) == FOUR_VERTEX_GENERIC_SOCLE
    alg = local_algebra(2, 2)
    assert generic_socle_layering(alg, loc([1, 2, 2]), all_skeleta=True) == loc([2, 2, 1])
