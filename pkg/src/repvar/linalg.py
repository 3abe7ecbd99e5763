"""Exact dense linear algebra over a prime field F_p.

Matrices are ``int64`` numpy arrays with entries in ``[0, p)``.  The prime
must be below ``2**31`` so that a single product of residues fits in 63 bits;
every kernel reduces after each multiply-add.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numba import njit

DEFAULT_PRIME = 2_147_483_647
_MAX_PRIME = 2**31


@lru_cache(maxsize=64)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    p = int(p)
    if p >= _MAX_PRIME:
        raise ValueError(f"modulus {p} must be below 2**31")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def as_matrix(a, p: int) -> np.ndarray:
    """Copy ``a`` into a reduced int64 matrix."""
    m = np.array(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size else m.reshape(0, 0)
    return m % p


@njit(cache=True)
def _matmul_kernel(a, b, p):
    n, k = a.shape
    m = b.shape[1]
    out = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for t in range(k):
            x = a[i, t]
            if x != 0:
                for j in range(m):
                    out[i, j] = (out[i, j] + x * b[t, j]) % p
    return out


@njit(cache=True)
def _rref_kernel(a, p):
    m = a.copy()
    rows, cols = m.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(cols):
                tmp = m[r, j]
                m[r, j] = m[k, j]
                m[k, j] = tmp
        base = m[r, c]
        e = p - 2
        inv = 1
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for j in range(c, cols):
            m[r, j] = m[r, j] * inv % p
        for i in range(rows):
            if i != r:
                f = m[i, c]
                if f != 0:
                    for j in range(c, cols):
                        m[i, j] = (m[i, j] - f * m[r, j]) % p
        pivots[r] = c
        r += 1
    return m[:r].copy(), pivots[:r].copy()


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return _matmul_kernel(
        np.ascontiguousarray(a, dtype=np.int64), np.ascontiguousarray(b, dtype=np.int64), p
    )


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot columns (leftmost pivots).

    Input entries must already lie in ``[0, p)``.
    """
    red, piv = _rref_kernel(np.ascontiguousarray(a, dtype=np.int64), p)
    return red, piv.tolist()


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def row_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical (RREF) basis of the row space, one basis vector per row."""
    if a.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    return rref(a, p)[0]


def col_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of the column space, one basis vector per column."""
    return row_basis(a.T, p).T


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{x : a x = 0}`` as the columns of the returned matrix."""
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    red, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        out[f, k] = 1
        for i, pc in enumerate(pivots):
            out[pc, k] = (-red[i, f]) % p
    return out


def left_annihilator(basis: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the functionals that vanish on the columns of ``basis``."""
    return nullspace(basis.T, p).T


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    red, pivots = rref(np.hstack([a % p, np.eye(n, dtype=np.int64)]), p)
    if n and (len(pivots) < n or pivots[n - 1] != n - 1):
        raise ZeroDivisionError("matrix is singular mod p")
    return red[:n, n:]


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Solve ``a x = b`` for full-column-rank ``a``; raises if inconsistent."""
    n = a.shape[1]
    red, pivots = rref(np.hstack([a % p, b % p]), p)
    if any(c >= n for c in pivots) or len(pivots) < n:
        raise ValueError("system has no unique solution")
    return red[:n, n:]


def in_span(basis: np.ndarray, vectors: np.ndarray, p: int) -> bool:
    """Whether every column of ``vectors`` lies in the column span of ``basis``."""
    base = rank(basis, p)
    return rank(np.hstack([basis, vectors]), p) == base


def mat_power(a: np.ndarray, k: int, p: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    base = a % p
    while k:
        if k & 1:
            out = matmul(out, base, p)
        base = matmul(base, base, p)
        k >>= 1
    return out


def random_matrix(rng: np.random.Generator, shape, p: int) -> np.ndarray:
    return rng.integers(0, p, size=shape, dtype=np.int64)


def random_invertible(rng: np.random.Generator, n: int, p: int) -> np.ndarray:
    while True:
        m = random_matrix(rng, (n, n), p)
        if rank(m, p) == n:
            return m
