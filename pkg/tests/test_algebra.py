import numpy as np
import pytest

from repvar.algebra import Arrow, Quiver, TruncatedAlgebra, arrow_multiplicity, local_algebra, nonzero_paths


def test_local_algebra_shapes():
    alg = local_algebra(3, 2)
    assert alg.is_local and alg.loop_count == 3 and alg.L == 2
    assert alg.quiver.arrow_ids == ("alpha1", "alpha2", "alpha3")
    poly = local_algebra(1, 4)
    assert [len(nonzero_paths(poly, l)) for l in range(6)] == [1, 1, 1, 1, 1, 0]


def test_nonzero_path_counts():
    alg = local_algebra(2, 2)
    assert len(nonzero_paths(alg, 2)) == 4
    assert nonzero_paths(alg, 3) == []


def test_four_vertex_paths(four_vertex):
    out = {(w.arrows, w.end) for w in nonzero_paths(four_vertex, 1, start=1)}
    assert out == {(("alpha",), 2), (("epsilon",), 4)}


def test_multiplicity(four_vertex, zigzag):
    m = arrow_multiplicity(four_vertex.quiver)
    expected = np.zeros((4, 4), dtype=int)
    for i, j in ((1, 2), (1, 4), (2, 3), (3, 3), (3, 1)):
        expected[i - 1, j - 1] = 1
    assert np.array_equal(m, expected)
    z = arrow_multiplicity(zigzag.quiver)
    assert {(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(z))} == {(1, 2), (2, 3), (3, 2), (3, 4)}
    assert arrow_multiplicity(local_algebra(5, 1).quiver).tolist() == [[5]]


def test_path_composition(four_vertex):
    q = four_vertex.quiver
    w = q.path(("delta", "beta", "alpha"))
    assert (w.start, w.end, w.length) == (1, 1, 3)
    assert w.applied_order() == ("alpha", "beta", "delta")
    assert q.path(("delta",)).after(q.path(("beta", "alpha"))) == w
    with pytest.raises(ValueError):
        q.path(("alpha", "beta"))


def test_invalid_inputs():
    with pytest.raises(ValueError):
        local_algebra(0, 2)
    with pytest.raises(ValueError):
        TruncatedAlgebra(Quiver(1, (Arrow("a", 1, 1),)), 0)
    with pytest.raises(ValueError):
        Quiver(2, (Arrow("a", 1, 3),))
    with pytest.raises(ValueError):
        Quiver(1, (Arrow("a", 1, 1), Arrow("a", 1, 1)))
    with pytest.raises(ValueError):
        TruncatedAlgebra.from_dict({"vertices": 1})


def test_dict_round_trip_and_opposite(four_vertex):
    assert TruncatedAlgebra.from_dict(four_vertex.to_dict()) == four_vertex
    opp = four_vertex.opposite()
    assert opp.quiver.arrow("alpha").source == 2 and opp.opposite() == four_vertex
