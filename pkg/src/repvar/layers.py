"""Semisimple sequences, the dominance order and realizability."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .algebra import TruncatedAlgebra, arrow_multiplicity

DimVector = tuple  # tuple[int, ...], one multiplicity per vertex


@dataclass(frozen=True, order=True)
class SemisimpleSequence:
    """Layers ``S_0 .. S_L`` as dimension vectors (trailing zeros kept)."""

    layers: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        layers = tuple(tuple(int(x) for x in layer) for layer in self.layers)
        if not layers:
            raise ValueError("a semisimple sequence needs at least one layer")
        n = len(layers[0])
        if any(len(layer) != n for layer in layers):
            raise ValueError("all layers must have the same number of vertices")
        if any(x < 0 for layer in layers for x in layer):
            raise ValueError("layer multiplicities must be nonnegative")
        object.__setattr__(self, "layers", layers)

    @classmethod
    def from_local(cls, dims: Sequence[int]) -> "SemisimpleSequence":
        return cls(tuple((int(x),) for x in dims))

    @property
    def L(self) -> int:
        return len(self.layers) - 1

    @property
    def n(self) -> int:
        return len(self.layers[0])

    def __len__(self) -> int:
        return len(self.layers)

    def __getitem__(self, l: int) -> tuple[int, ...]:
        return self.layers[l]

    def __iter__(self):
        return iter(self.layers)

    @property
    def total(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.sum(self.layers, axis=0))

    @property
    def dim(self) -> int:
        return sum(self.total)

    def layer_dims(self) -> tuple[int, ...]:
        return tuple(sum(layer) for layer in self.layers)

    def reverse(self) -> "SemisimpleSequence":
        return SemisimpleSequence(self.layers[::-1])

    def to_list(self) -> list[list[int]]:
        return [list(layer) for layer in self.layers]

    def __str__(self) -> str:
        if self.n == 1:
            return "(" + ",".join(str(layer[0]) for layer in self.layers) + ")"
        return "(" + ", ".join("(" + ",".join(map(str, layer)) + ")" for layer in self.layers) + ")"


def _check_comparable(S: SemisimpleSequence, T: SemisimpleSequence) -> None:
    if len(S) != len(T) or S.n != T.n:
        raise ValueError("sequences have different shapes")
    if S.total != T.total:
        raise ValueError(f"sequences have different total dimension vectors {S.total} and {T.total}")


def dominance_leq(S: SemisimpleSequence, T: SemisimpleSequence) -> bool:
    """True iff every prefix sum of ``S`` is at most that of ``T``, vertex by vertex."""
    _check_comparable(S, T)
    return bool(np.all(np.cumsum(S.layers, axis=0) <= np.cumsum(T.layers, axis=0)))


def pair_leq(a: tuple[SemisimpleSequence, SemisimpleSequence], b: tuple[SemisimpleSequence, SemisimpleSequence]) -> bool:
    """Componentwise dominance on (radical, socle) pairs."""
    return dominance_leq(a[0], b[0]) and dominance_leq(a[1], b[1])


def realizable(alg: TruncatedAlgebra, S: SemisimpleSequence) -> bool:
    if len(S) != alg.L + 1:
        raise ValueError(f"sequence has {len(S)} layers, algebra needs {alg.L + 1}")
    if S.n != alg.n:
        raise ValueError(f"sequence has {S.n} vertices, algebra has {alg.n}")
    mult = arrow_multiplicity(alg.quiver)
    layers = np.array(S.layers, dtype=np.int64)
    for l in range(1, alg.L + 1):
        if np.any(layers[l] > layers[l - 1] @ mult):
            return False
    return True


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_realizable(alg: TruncatedAlgebra, d: Sequence[int]) -> list[SemisimpleSequence]:
    """All realizable sequences with total ``d``, sorted by flattened layers."""
    d = tuple(int(x) for x in d)
    if len(d) != alg.n:
        raise ValueError(f"dimension vector has {len(d)} entries, algebra has {alg.n} vertices")
    if any(x < 0 for x in d):
        raise ValueError("dimension vector entries must be nonnegative")
    mult = arrow_multiplicity(alg.quiver)
    out: list[tuple[tuple[int, ...], ...]] = []

    def extend(prefix: list[tuple[int, ...]], remaining: tuple[int, ...]) -> None:
        if len(prefix) == alg.L + 1:
            if not any(remaining):
                out.append(tuple(prefix))
            return
        if prefix:
            cap = np.array(prefix[-1], dtype=np.int64) @ mult
            bounds = tuple(min(int(c), rem) for c, rem in zip(cap, remaining))
        else:
            bounds = remaining
        for layer in product(*(range(b + 1) for b in bounds)):
            extend(prefix + [layer], tuple(rem - x for rem, x in zip(remaining, layer)))

    extend([], d)
    out.sort(key=lambda layers: [x for layer in layers for x in layer])
    return [SemisimpleSequence(layers) for layers in out]


def local_dim(d) -> tuple[int, ...]:
    """Accept an int or a one-entry vector as a local dimension vector."""
    if isinstance(d, (int, np.integer)):
        return (int(d),)
    return tuple(int(x) for x in d)
