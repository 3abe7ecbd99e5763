import numpy as np
import pytest
from sympy import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from repvar import linalg as la

P = la.DEFAULT_PRIME
SMALL = 101


def test_prime_checks():
    assert la.is_prime(P) and la.is_prime(2) and not la.is_prime(1) and not la.is_prime(91)
    with pytest.raises(ValueError):
        la.check_prime(100)
    with pytest.raises(ValueError):
        la.check_prime(2**61 - 1)


@pytest.mark.parametrize("seed", range(20))
def test_rank_matches_sympy(seed):
    rng = np.random.default_rng(seed)
    rows, cols = (int(x) for x in rng.integers(1, 7, size=2))
    k = int(rng.integers(0, min(rows, cols) + 1))
    a = la.matmul(la.random_matrix(rng, (rows, k), SMALL), la.random_matrix(rng, (k, cols), SMALL), SMALL)
    dm = DomainMatrix([[ZZ(int(x)) for x in row] for row in a], a.shape, ZZ).convert_to(GF(SMALL))
    assert la.rank(a, SMALL) == dm.rank()
    assert la.rank(a, SMALL) == la.rank(a.T, SMALL)


@pytest.mark.parametrize("seed", range(10))
def test_inverse_and_nullspace(seed):
    rng = np.random.default_rng(seed)
    g = la.random_invertible(rng, 5, P)
    assert np.array_equal(la.matmul(g, la.inverse(g, P), P), np.eye(5, dtype=np.int64))
    a = la.random_matrix(rng, (3, 6), P)
    ns = la.nullspace(a, P)
    assert ns.shape == (6, 6 - la.rank(a, P))
    assert not np.any(la.matmul(a, ns, P))


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        la.inverse(np.array([[1, 2], [2, 4]]), P)


def test_no_overflow_near_modulus():
    a = np.full((4, 4), P - 1, dtype=np.int64)
    # (-1)*(-1) summed four times
    assert np.all(la.matmul(a, a, P) == 4)


def test_in_span_and_power():
    basis = np.array([[1, 0], [0, 1], [0, 0]])
    assert la.in_span(basis, np.array([[3], [5], [0]]), P)
    assert not la.in_span(basis, np.array([[0], [0], [1]]), P)
    j = np.array([[0, 0], [1, 0]])
    assert not np.any(la.mat_power(j, 2, P))
