"""Points of the representation variety as matrix tuples over F_p.

A module is stored as one matrix per arrow, shaped ``dims[target] x
dims[source]``.  Most computations work on the total space ``F_p^d`` with
vertex blocks laid out in vertex order; every subspace that arises (radical
and socle filtration terms) is a direct sum of its vertex parts, so the pivot
columns of its reduced echelon basis split cleanly by block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from . import linalg as la
from .algebra import PathWord, TruncatedAlgebra, words_of_length
from .layers import SemisimpleSequence


@dataclass(frozen=True)
class FieldSpec:
    p: int = la.DEFAULT_PRIME

    def __post_init__(self):
        la.check_prime(self.p)


@dataclass(frozen=True, eq=False)
class ModulePoint:
    alg: TruncatedAlgebra
    dims: tuple[int, ...]
    mats: Mapping[str, np.ndarray]
    field: FieldSpec = FieldSpec()

    def __post_init__(self):
        dims = tuple(int(x) for x in self.dims)
        if len(dims) != self.alg.n or any(x < 0 for x in dims):
            raise ValueError(f"dimension vector {dims} does not fit {self.alg.n} vertices")
        p = self.field.p
        mats = {}
        for a in self.alg.quiver.arrows:
            if a.id not in self.mats:
                raise ValueError(f"missing matrix for arrow {a.id!r}")
            shape = (dims[a.target - 1], dims[a.source - 1])
            m = np.array(self.mats[a.id], dtype=np.int64)
            if m.size == 0:
                m = m.reshape(shape)
            if m.shape != shape:
                raise ValueError(f"arrow {a.id!r} needs a {shape[0]}x{shape[1]} matrix, got {m.shape}")
            m = m % p
            m.setflags(write=False)
            mats[a.id] = m
        extra = set(self.mats) - set(mats)
        if extra:
            raise ValueError(f"matrices given for unknown arrows {sorted(extra)}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mats", mats)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.concatenate([[0], np.cumsum(self.dims)]))

    def block(self, vertex: int) -> slice:
        return slice(self.offsets[vertex - 1], self.offsets[vertex])

    @cached_property
    def operators(self) -> dict[str, np.ndarray]:
        """Each arrow as a ``d x d`` operator on the total space."""
        d = self.dim
        out = {}
        for a in self.alg.quiver.arrows:
            big = np.zeros((d, d), dtype=np.int64)
            big[self.block(a.target), self.block(a.source)] = self.mats[a.id]
            out[a.id] = big
        return out

    def path_operator(self, word: PathWord) -> np.ndarray:
        d = self.dim
        out = np.zeros((d, d), dtype=np.int64)
        s = self.block(word.start)
        out[s, s] = np.eye(self.dims[word.start - 1], dtype=np.int64)
        for a in word.applied_order():
            out = la.matmul(self.operators[a], out, self.p)
        return out

    def vertex_dims(self, basis_rows: np.ndarray) -> tuple[int, ...]:
        """Per-vertex dimensions of a graded subspace given by its RREF rows."""
        pivots = [int(np.flatnonzero(row)[0]) for row in basis_rows]
        return tuple(sum(1 for c in pivots if self.offsets[i] <= c < self.offsets[i + 1]) for i in range(self.alg.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModulePoint):
            return NotImplemented
        return (
            self.alg == other.alg
            and self.dims == other.dims
            and self.p == other.p
            and all(np.array_equal(self.mats[k], other.mats[k]) for k in self.mats)
        )

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "algebra": self.alg.to_dict(),
            "dims": list(self.dims),
            "p": self.p,
            "mats": {k: self.mats[k].tolist() for k in sorted(self.mats)},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ModulePoint":
        try:
            alg = TruncatedAlgebra.from_dict(data["algebra"])
            dims = tuple(int(x) for x in data["dims"])
            p = int(data.get("p", la.DEFAULT_PRIME))
            mats = {}
            for a in alg.quiver.arrows:
                raw = data["mats"][a.id]
                shape = (dims[a.target - 1], dims[a.source - 1])
                mats[a.id] = np.array(raw, dtype=np.int64).reshape(shape)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed module description: {exc}") from exc
        for m in mats.values():
            if m.size and (m.min() < 0 or m.max() >= p):
                raise ValueError("matrix entries must lie in [0, p)")
        return cls(alg, dims, mats, FieldSpec(p))


def zero_module(alg: TruncatedAlgebra, dims: Sequence[int], p: int = la.DEFAULT_PRIME) -> ModulePoint:
    dims = tuple(int(x) for x in dims)
    mats = {a.id: np.zeros((dims[a.target - 1], dims[a.source - 1]), dtype=np.int64) for a in alg.quiver.arrows}
    return ModulePoint(alg, dims, mats, FieldSpec(p))


def direct_sum(*modules: ModulePoint) -> ModulePoint:
    """Block direct sum; vertex blocks stay contiguous."""
    first = modules[0]
    dims = tuple(sum(m.dims[i] for m in modules) for i in range(first.alg.n))
    mats = {}
    for a in first.alg.quiver.arrows:
        mats[a.id] = _block_diag([m.mats[a.id] for m in modules])
    return ModulePoint(first.alg, dims, mats, first.field)


def _block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def conjugate(M: ModulePoint, change: Mapping[int, np.ndarray]) -> ModulePoint:
    """The isomorphic point ``g . M`` with ``g`` block diagonal, one invertible matrix per vertex."""
    p = M.p
    inv = {v: la.inverse(g, p) for v, g in change.items()}
    mats = {}
    for a in M.alg.quiver.arrows:
        mats[a.id] = la.matmul(la.matmul(change[a.target], M.mats[a.id], p), inv[a.source], p)
    return ModulePoint(M.alg, M.dims, mats, M.field)


# -- filtrations ---------------------------------------------------------------------------


def radical_filtration(M: ModulePoint) -> list[np.ndarray]:
    """RREF row bases of ``J^l M`` for ``l = 0 .. L + 1``."""
    p = M.p
    current = np.eye(M.dim, dtype=np.int64)
    out = [current]
    ops_t = [M.operators[a].T.copy() for a in M.alg.quiver.arrow_ids]
    for _ in range(M.alg.L + 1):
        if current.shape[0] == 0 or not ops_t:
            current = np.zeros((0, M.dim), dtype=np.int64)
        else:
            current = la.row_basis(np.vstack([la.matmul(current, f, p) for f in ops_t]), p)
        out.append(current)
    return out


def _word_rowspaces(M: ModulePoint, count: int) -> list[np.ndarray]:
    """RREF bases of the row spaces spanned by all words of length ``1 .. count``."""
    p = M.p
    current = np.eye(M.dim, dtype=np.int64)
    ops = [M.operators[a] for a in M.alg.quiver.arrow_ids]
    out = []
    for _ in range(count):
        if current.shape[0] == 0 or not ops:
            current = np.zeros((0, M.dim), dtype=np.int64)
        else:
            current = la.row_basis(np.vstack([la.matmul(current, f, p) for f in ops]), p)
        out.append(current)
    return out


def socle_filtration_dims(M: ModulePoint) -> list[tuple[int, ...]]:
    """Per-vertex dimensions of ``soc_l M = {x : J^{l+1} x = 0}`` for ``l = 0 .. L``."""
    out = []
    for q in _word_rowspaces(M, M.alg.L + 1):
        killed = M.vertex_dims(q)
        out.append(tuple(d - k for d, k in zip(M.dims, killed)))
    return out


def _check_shape(M: ModulePoint) -> None:
    if not isinstance(M, ModulePoint):
        raise TypeError("expected a ModulePoint")


def check_point(M: ModulePoint) -> list[PathWord]:
    """Violated relations: the length-(L+1) words acting nonzero.  Empty means the point is valid."""
    _check_shape(M)
    if radical_filtration(M)[-1].shape[0] == 0:
        return []
    bad = []
    for w in words_of_length(M.alg.quiver, M.alg.L + 1):
        if np.any(M.path_operator(w)):
            bad.append(w)
    return bad


def _layers_from_chain(dims_chain: list[tuple[int, ...]]) -> SemisimpleSequence:
    return SemisimpleSequence(
        tuple(tuple(a - b for a, b in zip(upper, lower)) for upper, lower in zip(dims_chain, dims_chain[1:]))
    )


def radical_layering(M: ModulePoint) -> SemisimpleSequence:
    """``(J^l M / J^{l+1} M)`` as per-vertex multiplicities."""
    chain = [M.vertex_dims(r) for r in radical_filtration(M)]
    return _layers_from_chain(chain)


def socle_layering(M: ModulePoint) -> SemisimpleSequence:
    """``(soc_0 M, soc_1 M / soc_0 M, ...)`` as per-vertex multiplicities."""
    chain = socle_filtration_dims(M)
    zero = tuple(0 for _ in M.dims)
    return SemisimpleSequence(
        tuple(tuple(a - b for a, b in zip(upper, lower)) for upper, lower in zip(chain, [zero] + chain[:-1]))
    )


def radsoc_pair(M: ModulePoint) -> tuple[SemisimpleSequence, SemisimpleSequence]:
    return radical_layering(M), socle_layering(M)


def path_nullity(M: ModulePoint, word: PathWord) -> int:
    return M.dim - la.rank(M.path_operator(word), M.p)


def dual_module(M: ModulePoint) -> ModulePoint:
    """``Hom(M, K)`` over the opposite algebra: transpose every matrix."""
    mats = {k: m.T.copy() for k, m in M.mats.items()}
    return ModulePoint(M.alg.opposite(), M.dims, mats, M.field)


def loewy_full_support_check(M: ModulePoint) -> bool:
    """True iff ``J^L x != 0`` for every ``x`` outside ``JM``."""
    p = M.p
    words = _word_rowspaces(M, M.alg.L)[-1]
    killed = la.nullspace(words, p) if words.shape[0] else np.eye(M.dim, dtype=np.int64)
    radical = radical_filtration(M)[1]
    ann = la.left_annihilator(radical.T, p) if radical.shape[0] else np.eye(M.dim, dtype=np.int64)
    if ann.shape[0] == 0 or killed.shape[1] == 0:
        return True
    return not np.any(la.matmul(ann, killed, p))


def simple_summand_ranks(M: ModulePoint) -> list[bool]:
    """For each ``rho`` in ``0 .. L-1``: does ``J^rho M / J^{rho+2} M`` have a simple summand?"""
    p = M.p
    filt = radical_filtration(M)
    layer = radical_layering(M).layer_dims()
    out = []
    for rho in range(M.alg.L):
        top = filt[rho]
        if layer[rho] == 0:
            out.append(False)
            continue
        below = filt[rho + 2]
        ann = la.left_annihilator(below.T, p) if below.shape[0] else np.eye(M.dim, dtype=np.int64)
        if ann.shape[0] == 0:
            out.append(True)
            continue
        if not M.alg.quiver.arrows:
            out.append(True)
            continue
        images = np.vstack([la.matmul(ann, la.matmul(M.operators[a], top.T.copy(), p), p) for a in M.alg.quiver.arrow_ids])
        out.append(la.rank(images, p) < layer[rho])
    return out


# -- subfactors ------------------------------------------------------------------------------


def _homogeneous_parts(M: ModulePoint, rows: np.ndarray) -> dict[int, np.ndarray]:
    """Split RREF rows of a graded subspace into per-vertex column bases (local coordinates)."""
    parts = {}
    for v in M.alg.quiver.vertices:
        s = M.block(v)
        sel = [row[s] for row in rows if np.any(row[s])]
        parts[v] = np.array(sel, dtype=np.int64).T.reshape(M.dims[v - 1], len(sel))
    return parts


def subfactor(M: ModulePoint, rho: int, tau: int) -> ModulePoint:
    """``J^rho M / J^{tau+1} M`` as a module over the algebra truncated at ``tau - rho``."""
    if not 0 <= rho <= tau <= M.alg.L:
        raise ValueError("need 0 <= rho <= tau <= L")
    p = M.p
    filt = radical_filtration(M)
    upper = _homogeneous_parts(M, filt[rho])
    lower = _homogeneous_parts(M, filt[tau + 1])
    frames = {}
    comps = {}
    for v in M.alg.quiver.vertices:
        w = lower[v]
        chosen = [w[:, j] for j in range(w.shape[1])]
        base = w.shape[1]
        extra = []
        for j in range(upper[v].shape[1]):
            cand = upper[v][:, j]
            trial = np.array(chosen + extra + [cand], dtype=np.int64).T
            if la.rank(trial, p) == base + len(extra) + 1:
                extra.append(cand)
        frames[v] = np.array(chosen + extra, dtype=np.int64).T.reshape(M.dims[v - 1], base + len(extra))
        comps[v] = (base, len(extra))
    dims = tuple(comps[v][1] for v in M.alg.quiver.vertices)
    mats = {}
    for a in M.alg.quiver.arrows:
        base_t, k_t = comps[a.target]
        base_s, k_s = comps[a.source]
        src = frames[a.source][:, base_s:]
        img = la.matmul(M.mats[a.id], src, p)
        if k_t == 0 or k_s == 0:
            mats[a.id] = np.zeros((k_t, k_s), dtype=np.int64)
            continue
        coords = la.solve(frames[a.target], img, p)
        mats[a.id] = coords[base_t:, :]
    return ModulePoint(M.alg.with_truncation(max(tau - rho, 1)), dims, mats, M.field)


# -- endomorphisms ---------------------------------------------------------------------------


def endomorphism_algebra(M: ModulePoint) -> list[np.ndarray]:
    """Basis of ``End(M)`` as block-diagonal ``d x d`` matrices."""
    p = M.p
    n = M.alg.n
    sizes = [M.dims[i] ** 2 for i in range(n)]
    starts = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    unknowns = int(starts[-1])
    if unknowns == 0:
        return []
    rows = []
    for a in M.alg.quiver.arrows:
        A = M.mats[a.id]
        di, dj = M.dims[a.source - 1], M.dims[a.target - 1]
        if di == 0 or dj == 0:
            continue
        eq = np.zeros((dj * di, unknowns), dtype=np.int64)
        # X_j A - A X_i = 0, vectorised row-major: vec(X A) = (I kron A^T) vec X
        sj = slice(starts[a.target - 1], starts[a.target])
        si = slice(starts[a.source - 1], starts[a.source])
        eq[:, sj] = (eq[:, sj] + np.kron(np.eye(dj, dtype=np.int64), A.T)) % p
        eq[:, si] = (eq[:, si] - np.kron(A, np.eye(di, dtype=np.int64))) % p
        rows.append(eq)
    system = np.vstack(rows) if rows else np.zeros((0, unknowns), dtype=np.int64)
    kernel = la.nullspace(system, p)
    basis = []
    for k in range(kernel.shape[1]):
        phi = np.zeros((M.dim, M.dim), dtype=np.int64)
        for v in M.alg.quiver.vertices:
            dv = M.dims[v - 1]
            if dv:
                phi[M.block(v), M.block(v)] = kernel[starts[v - 1] : starts[v], k].reshape(dv, dv)
        basis.append(phi)
    return basis


def endomorphism_dimension(M: ModulePoint) -> int:
    return len(endomorphism_algebra(M))


def _top_dimension(basis: list[np.ndarray], p: int) -> int:
    """``dim End / rad End`` from the rank of the trace form (needs ``p > d``)."""
    k = len(basis)
    gram = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(i, k):
            t = int(np.trace(la.matmul(basis[i], basis[j], p))) % p
            gram[i, j] = gram[j, i] = t
    return la.rank(gram, p)


def is_indecomposable(M: ModulePoint, trials: int = 25, seed: int = 0) -> bool:
    """Absolute indecomposability: ``End(M) / rad`` is one-dimensional.

    The top dimension is read off the trace form of ``End(M)``, which is exact
    once ``p`` exceeds ``dim M``.  Random endomorphisms are also tested for a
    nontrivial Fitting decomposition as an independent cross-check.
    """
    p = M.p
    d = M.dim
    if d == 0:
        return False
    if p <= d:
        raise ValueError(f"field too small: need p > dim M = {d}")
    basis = endomorphism_algebra(M)
    verdict = _top_dimension(basis, p) == 1
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeffs = rng.integers(0, p, size=len(basis))
        phi = np.zeros((d, d), dtype=np.int64)
        for c, b in zip(coeffs, basis):
            phi = (phi + int(c) * b) % p
        r = la.rank(la.mat_power(phi, d, p), p)
        if 0 < r < d and verdict:
            raise AssertionError("trace form and Fitting decomposition disagree")
    return verdict
