"""One-parameter deformation families ``t -> D_t`` with prescribed layering jumps.

Both constructions work in a basis adapted to the radical filtration:
``b_{l,1}, b_{l,2}, ...`` span ``J^l M`` modulo ``J^{l+1} M``.  In such a
basis every arrow maps layer ``l`` into the span of the layers below it, so
a single extra entry ``t`` (placed to push one basis vector down a layer)
gives a family in the module variety whose fibre at ``t = 0`` is ``M`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import linalg as la
from .algebra import TruncatedAlgebra
from .layers import SemisimpleSequence, realizable
from .repmod import FieldSpec, ModulePoint, radical_filtration, radical_layering


@dataclass(frozen=True)
class GradedMapData:
    """A grading ``K_0 + ... + K_L`` (per-vertex sizes) and arrow blocks ``K_l -> K_u`` with ``u > l``.

    ``blocks[arrow][(l, u)]`` has shape ``K_u[target] x K_l[source]``.
    """

    alg: TruncatedAlgebra
    layer_dims: tuple[tuple[int, ...], ...]
    blocks: Mapping[str, Mapping[tuple[int, int], np.ndarray]]
    p: int = la.DEFAULT_PRIME

    def __post_init__(self):
        layer_dims = tuple(tuple(int(x) for x in k) for k in self.layer_dims)
        if len(layer_dims) != self.alg.L + 1:
            raise ValueError(f"need {self.alg.L + 1} graded pieces")
        if any(len(k) != self.alg.n for k in layer_dims):
            raise ValueError("each graded piece needs one size per vertex")
        object.__setattr__(self, "layer_dims", layer_dims)
        for aid, per in self.blocks.items():
            a = self.alg.quiver.arrow(aid)
            for (l, u), m in per.items():
                if not 0 <= l < u <= self.alg.L:
                    raise ValueError(f"block ({l}, {u}) for {aid!r} does not go strictly down")
                shape = (layer_dims[u][a.target - 1], layer_dims[l][a.source - 1])
                if np.shape(m) != shape and not (np.size(m) == 0 and 0 in shape):
                    raise ValueError(f"block ({l}, {u}) for {aid!r} must be {shape[0]}x{shape[1]}")

    @property
    def profile(self) -> SemisimpleSequence:
        return SemisimpleSequence(self.layer_dims)


def graded_point(data: GradedMapData) -> ModulePoint:
    """Assemble the matrices; each vertex basis is ordered by graded piece."""
    alg = data.alg
    K = data.layer_dims
    dims = tuple(sum(k[i] for k in K) for i in range(alg.n))
    start = {}
    for i in range(alg.n):
        off = 0
        for l, k in enumerate(K):
            start[(l, i + 1)] = off
            off += k[i]
    mats = {}
    for a in alg.quiver.arrows:
        m = np.zeros((dims[a.target - 1], dims[a.source - 1]), dtype=np.int64)
        for (l, u), blk in data.blocks.get(a.id, {}).items():
            rows, cols = K[u][a.target - 1], K[l][a.source - 1]
            if rows and cols:
                r0, c0 = start[(u, a.target)], start[(l, a.source)]
                m[r0 : r0 + rows, c0 : c0 + cols] = np.asarray(blk, dtype=np.int64) % data.p
        mats[a.id] = m
    return ModulePoint(alg, dims, mats, FieldSpec(data.p))


@dataclass(frozen=True, eq=False)
class DeformationFamily:
    """Matrices ``base + t * direction``; ``change_of_basis`` has the adapted basis as columns."""

    base: ModulePoint
    direction: Mapping[str, np.ndarray]
    target_S: SemisimpleSequence
    change_of_basis: np.ndarray
    witness: Mapping[str, object] = field(default_factory=dict)

    def evaluate(self, t: int) -> ModulePoint:
        p = self.base.p
        t = int(t) % p
        mats = {k: (m + t * self.direction[k]) % p for k, m in self.base.mats.items()}
        return ModulePoint(self.base.alg, self.base.dims, mats, self.base.field)


def evaluate(fam: DeformationFamily, t: int) -> ModulePoint:
    return fam.evaluate(t)


# -- adapted bases --------------------------------------------------------------------------------


def _require_local(M: ModulePoint) -> None:
    if not M.alg.is_local:
        raise ValueError("deformation families are implemented for local algebras only")


def _adapted_layers(M: ModulePoint) -> list[np.ndarray]:
    """Column blocks ``B_l`` whose columns span ``J^l M`` modulo ``J^{l+1} M``."""
    p = M.p
    filt = radical_filtration(M)
    layers = []
    for l in range(M.alg.L + 1):
        lower = filt[l + 1].T
        have = lower.shape[1]
        chosen = []
        current = lower
        for row in filt[l]:
            trial = np.hstack([current, row.reshape(-1, 1)])
            if la.rank(trial, p) == have + len(chosen) + 1:
                chosen.append(row)
                current = trial
        layers.append(np.array(chosen, dtype=np.int64).T.reshape(M.dim, len(chosen)))
    return layers


def _in_basis(M: ModulePoint, P: np.ndarray) -> dict[str, np.ndarray]:
    p = M.p
    inv = la.inverse(P, p)
    return {a: la.matmul(la.matmul(inv, M.operators[a], p), P, p) for a in M.alg.quiver.arrow_ids}


def _offsets(sizes: Sequence[int]) -> list[int]:
    return [int(x) for x in np.concatenate([[0], np.cumsum(sizes)])]


def _layer_block(coords: dict[str, np.ndarray], off: list[int], rows_layer: int, cols_layer: int) -> list[np.ndarray]:
    return [m[off[rows_layer] : off[rows_layer + 1], off[cols_layer] : off[cols_layer + 1]] for m in coords.values()]


def _moved(S: SemisimpleSequence, changes: Mapping[int, int]) -> SemisimpleSequence:
    dims = list(S.layer_dims())
    for l, v in changes.items():
        dims[l] = v
    return SemisimpleSequence.from_local(dims)


# -- push one simple down a layer -------------------------------------------------------------------


def push_down_family(M: ModulePoint, rho: int) -> DeformationFamily:
    """Family moving one simple from layer ``rho`` to ``rho + 1`` of the radical layering.

    Needs a top element ``b`` of layer ``rho`` with ``J b`` inside ``J^{rho+2} M``,
    and the target sequence must be realizable.
    """
    _require_local(M)
    p = M.p
    L = M.alg.L
    if not 0 <= rho < L:
        raise ValueError(f"layer index must lie in 0..{L - 1}")
    S = radical_layering(M)
    s = S.layer_dims()
    if s[rho] == 0:
        raise ValueError(f"layer {rho} is empty")
    target = _moved(S, {rho: s[rho] - 1, rho + 1: s[rho + 1] + 1})
    if not realizable(M.alg, target):
        raise ValueError(f"target sequence {target} is not realizable")
    layers = _adapted_layers(M)
    P = np.hstack(layers)
    coords = _in_basis(M, P)
    off = _offsets(s)
    phi = np.vstack(_layer_block(coords, off, rho + 1, rho))
    kernel = la.nullspace(phi, p)
    if kernel.shape[1] == 0:
        raise ValueError(f"no element of layer {rho} is pushed into J^{rho + 2} by every arrow")
    k = kernel[:, 0]
    free = int(np.flatnonzero(k)[-1])
    top = layers[rho]
    new_first = la.matmul(top, k.reshape(-1, 1), p)
    rest = [top[:, j] for j in range(top.shape[1]) if j != free]
    # witness: first (arrow, index) whose image in layer rho+1 depends on the others
    arrows = M.alg.quiver.arrow_ids
    rest_mat = np.array(rest, dtype=np.int64).T.reshape(M.dim, len(rest))
    layers[rho] = np.hstack([new_first, rest_mat])
    P = np.hstack(layers)
    coords = _in_basis(M, P)
    vecs = {
        (a, j): coords[a][off[rho + 1] : off[rho + 2], off[rho] + j]
        for a in arrows
        for j in range(1, s[rho])
    }
    witness = None
    for key, v in vecs.items():
        others = [w for other, w in vecs.items() if other != key]
        if not others:
            break
        span = np.array(others, dtype=np.int64).T
        if la.in_span(span, v.reshape(-1, 1), p):
            witness = key
            break
    if witness is None:
        raise ValueError("no dependency among the layer images; the target layering cannot be reached")
    gamma, j = witness
    if j != 1:
        cols = list(range(s[rho]))
        cols[1], cols[j] = cols[j], cols[1]
        layers[rho] = layers[rho][:, cols]
        P = np.hstack(layers)
        coords = _in_basis(M, P)
    base = ModulePoint(M.alg, M.dims, {a: coords[a] for a in arrows}, M.field)
    direction = {a: np.zeros((M.dim, M.dim), dtype=np.int64) for a in arrows}
    direction[gamma][off[rho], off[rho] + 1] = 1
    info = {"kind": "push-down", "layer": rho, "arrow": gamma, "index": j + 1}
    return DeformationFamily(base, direction, target, P, info)


# -- extend the uniserial tail ---------------------------------------------------------------------


def tail_extension_family(M: ModulePoint, h: int | None = None) -> DeformationFamily:
    """Family lengthening the radical series when the last possible layer is empty.

    With ``m = min(dim M, L + 1)`` and layer ``m - 1`` empty, let ``h`` be the
    deepest layer of dimension at least two (passing ``h`` only checks that
    choice).  The family sends ``alpha_1 b_{h,1}``
    to ``t b_{h,2}``, so one simple leaves layer ``h`` and the single simples
    below it shift down by one.
    """
    _require_local(M)
    p = M.p
    L = M.alg.L
    S = radical_layering(M)
    s = S.layer_dims()
    m = min(M.dim, L + 1)
    if s[m - 1] != 0:
        raise ValueError(f"layer {m - 1} is nonzero; the tail cannot be extended")
    last = max(l for l in range(L + 1) if s[l])
    deepest = max(l for l in range(last + 1) if s[l] >= 2)
    if h is not None and h != deepest:
        raise ValueError(f"layer {h} is not the deepest layer of dimension at least two (that is {deepest})")
    h = deepest
    layers = _adapted_layers(M)
    P = np.hstack(layers)
    coords = _in_basis(M, P)
    off = _offsets(s)
    first_arrow = M.alg.quiver.arrow_ids[0]
    block = coords[first_arrow][off[h + 1] : off[h + 2], off[h] : off[h + 1]]
    kernel = la.nullspace(block, p)
    k = kernel[:, 0]
    free = int(np.flatnonzero(k)[-1])
    top = layers[h]
    b1 = la.matmul(top, k.reshape(-1, 1), p)
    rest = [top[:, [j]] for j in range(top.shape[1]) if j != free]
    layers[h] = np.hstack([b1] + rest)
    P = np.hstack(layers)
    coords = _in_basis(M, P)

    def leaves_layer(j: int) -> bool:
        return any(np.any(c[off[h + 1] : off[h + 2], off[h] + j]) for c in coords.values())

    if s[h + 1]:
        pick = next((j for j in range(1, s[h]) if leaves_layer(j)), None)
        if pick is None:
            if not leaves_layer(0):
                raise ValueError(f"J^{h + 1} M is not generated by a single top element of layer {h}")
            layers[h][:, 1] = (layers[h][:, 1] + layers[h][:, 0]) % p
        elif pick != 1:
            cols = list(range(s[h]))
            cols[1], cols[pick] = cols[pick], cols[1]
            layers[h] = layers[h][:, cols]
        P = np.hstack(layers)
        coords = _in_basis(M, P)
    arrows = M.alg.quiver.arrow_ids
    base = ModulePoint(M.alg, M.dims, {a: coords[a] for a in arrows}, M.field)
    direction = {a: np.zeros((M.dim, M.dim), dtype=np.int64) for a in arrows}
    direction[first_arrow][off[h] + 1, off[h]] = 1
    dims = [s[l] for l in range(h)] + [s[h] - 1] + [1] * (last + 1 - h) + [0] * (L - last - 1)
    target = SemisimpleSequence.from_local(dims)
    info = {"kind": "tail-extension", "layer": h, "arrow": first_arrow, "last_layer": last}
    return DeformationFamily(base, direction, target, P, info)
