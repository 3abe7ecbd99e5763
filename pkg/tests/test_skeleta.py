import numpy as np
import pytest

from repvar import linalg as la
from repvar.acceptance import FOUR_VERTEX_S, random_algebra, random_realizable
from repvar.algebra import local_algebra
from repvar.layers import SemisimpleSequence
from repvar.repmod import check_point, radical_layering, socle_layering
from repvar.skeleta import (
    Skeleton,
    enumerate_skeleta,
    first_skeleton,
    presentation_template,
    random_skeleton,
    sample_module,
)

loc = SemisimpleSequence.from_local


def test_four_vertex_skeleton_count(four_vertex):
    skeleta = enumerate_skeleta(four_vertex, FOUR_VERTEX_S)
    assert len(skeleta) == 4
    assert len({sk.members for sk in skeleta}) == 4
    for sk in skeleta:
        assert sk.is_closed() and sk.layer_profile() == FOUR_VERTEX_S


def test_counts_on_small_cases():
    assert len(enumerate_skeleta(local_algebra(2, 2), loc([1, 1, 1]))) == 4
    assert len(enumerate_skeleta(local_algebra(3, 2), loc([1, 1, 1]))) == 9
    (only,) = enumerate_skeleta(local_algebra(2, 2), loc([3, 0, 0]))
    assert only.members == ((1, ()), (2, ()), (3, ()))
    assert enumerate_skeleta(local_algebra(2, 2), loc([1, 3, 0])) == []


def test_template_of_a_simple():
    tpl = presentation_template(first_skeleton(local_algebra(2, 2), loc([1, 0, 0])))
    assert tpl.criticals == ((1, ("alpha1",)), (1, ("alpha2",)))
    assert all(v == () for v in tpl.eligible.values()) and tpl.N == 0
    M = tpl.realize([])
    assert M.dims == (1,) and not any(np.any(m) for m in M.mats.values())


def test_uniserial_template():
    alg = local_algebra(2, 2)
    sk = Skeleton(alg, (1,), ((1, ()), (1, ("alpha1",)), (1, ("alpha1", "alpha1"))))
    tpl = presentation_template(sk)
    assert tpl.criticals == ((1, ("alpha2",)), (1, ("alpha2", "alpha1")))
    assert tpl.eligible[(1, ("alpha2",))] == ((1, ("alpha1",)), (1, ("alpha1", "alpha1")))
    assert tpl.eligible[(1, ("alpha2", "alpha1"))] == ((1, ("alpha1", "alpha1")),)
    assert tpl.N == 3
    M = tpl.realize([1, 0, 0])
    assert M.mats["alpha1"].tolist() == [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    assert M.mats["alpha2"].tolist() == [[0, 0, 0], [1, 0, 0], [0, 0, 0]]
    with pytest.raises(ValueError):
        tpl.realize([1, 2])


def test_four_vertex_first_template(four_vertex):
    tpl = presentation_template(first_skeleton(four_vertex, FOUR_VERTEX_S))
    crit = (2, ("delta", "beta"))
    assert crit in tpl.criticals
    assert (1, ("delta", "beta", "alpha")) in tpl.eligible[crit]
    assert tpl.N == 3
    M = tpl.realize(la.random_matrix(np.random.default_rng(0), (tpl.N,), la.DEFAULT_PRIME))
    assert check_point(M) == [] and radical_layering(M) == FOUR_VERTEX_S


def test_every_four_vertex_skeleton_realizes_s(four_vertex, rng):
    for sk in enumerate_skeleta(four_vertex, FOUR_VERTEX_S):
        tpl = presentation_template(sk)
        for _ in range(5):
            M = tpl.realize(la.random_matrix(rng, (tpl.N,), la.DEFAULT_PRIME))
            assert radical_layering(M) == FOUR_VERTEX_S


def test_render_parse_round_trip(four_vertex):
    for sk in enumerate_skeleta(four_vertex, FOUR_VERTEX_S):
        assert Skeleton.parse(four_vertex, sk.render()) == sk
        assert Skeleton.from_dict(four_vertex, sk.to_dict()) == sk


def test_random_skeleta_are_valid():
    rng = np.random.default_rng(11)
    for _ in range(60):
        alg = random_algebra(rng)
        S = random_realizable(alg, rng)
        sk = random_skeleton(alg, S, rng)
        assert sk.is_closed() and sk.layer_profile() == S
        assert sk in enumerate_skeleta(alg, S)


def test_sample_module_examples():
    U = sample_module(local_algebra(2, 2), loc([1, 1, 1]), seed=0)
    assert socle_layering(U) == loc([1, 1, 1])
    G = sample_module(local_algebra(2, 2), loc([2, 2, 2]), seed=0)
    assert socle_layering(G) == loc([2, 2, 2])
    a = sample_module(local_algebra(2, 2), loc([2, 2, 2]), seed=4, skeleton="random")
    b = sample_module(local_algebra(2, 2), loc([2, 2, 2]), seed=4, skeleton="random")
    assert a == b
    with pytest.raises(ValueError):
        sample_module(local_algebra(2, 2), loc([2, 2, 2]), skeleton="best")
