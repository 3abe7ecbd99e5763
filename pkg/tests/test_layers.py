from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repvar.algebra import arrow_multiplicity, local_algebra
from repvar.layers import SemisimpleSequence, dominance_leq, enumerate_realizable, pair_leq, realizable

loc = SemisimpleSequence.from_local


def test_basic_shape():
    S = SemisimpleSequence(((1, 1, 0, 0), (0, 1, 1, 1)))
    assert S.L == 1 and S.n == 4 and S.total == (1, 2, 1, 1) and S.dim == 5
    assert str(loc([1, 3, 6])) == "(1,3,6)"
    assert loc([1, 3, 6]).reverse() == loc([6, 3, 1])
    with pytest.raises(ValueError):
        SemisimpleSequence(((1, 0), (1,)))
    with pytest.raises(ValueError):
        loc([1, -1])


def test_dominance_examples():
    S = SemisimpleSequence(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    T = SemisimpleSequence(((1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 0, 0), (0, 0, 0, 0)))
    assert dominance_leq(S, T) and not dominance_leq(T, S)
    assert dominance_leq(S, S)
    assert dominance_leq(loc([1, 2, 1]), loc([2, 1, 1]))
    assert pair_leq((S, S), (T, S)) and not pair_leq((T, S), (S, S))
    with pytest.raises(ValueError):
        dominance_leq(loc([1, 2]), loc([2, 2]))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3).flatmap(lambda xs: st.tuples(*[st.permutations(xs)] * 3)))
def test_dominance_is_a_partial_order(triple):
    a, b, c = (loc(x) for x in triple)
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)


def test_realizable_examples():
    alg = local_algebra(2, 2)
    assert realizable(alg, loc([1, 2, 4]))
    assert not realizable(alg, loc([1, 3, 0]))
    with pytest.raises(ValueError):
        realizable(alg, loc([1, 2]))


def test_realizable_on_four_vertex(four_vertex):
    from repvar.acceptance import FOUR_VERTEX_S

    assert realizable(four_vertex, FOUR_VERTEX_S)
    bad = SemisimpleSequence(((1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 0), (0, 0, 0, 0)))
    assert not realizable(four_vertex, bad)


def _brute_force(alg, d):
    mult = arrow_multiplicity(alg.quiver)
    n, L = alg.n, alg.L
    out = []
    for flat in product(*(range(x + 1) for x in d for _ in range(L + 1))):
        layers = np.array(flat).reshape(n, L + 1).T
        if tuple(layers.sum(axis=0)) != tuple(d):
            continue
        if all(np.all(layers[l] <= layers[l - 1] @ mult) for l in range(1, L + 1)):
            out.append(SemisimpleSequence(tuple(map(tuple, layers.tolist()))))
    return sorted(out, key=lambda S: [x for layer in S for x in layer])


def test_enumeration_matches_brute_force(four_vertex, zigzag):
    assert enumerate_realizable(local_algebra(2, 1), (3,)) == [loc([1, 2]), loc([2, 1]), loc([3, 0])]
    for alg, d in ((local_algebra(3, 2), (6,)), (four_vertex, (1, 1, 2, 1)), (zigzag, (1, 2, 1, 1))):
        assert enumerate_realizable(alg, d) == _brute_force(alg, d)


def test_enumeration_contents():
    seqs = enumerate_realizable(local_algebra(3, 2), (10,))
    assert loc([1, 3, 6]) in seqs and loc([6, 3, 1]) in seqs
    assert enumerate_realizable(local_algebra(2, 3), (1,)) == [loc([1, 0, 0, 0])]
