"""Quivers, paths and truncated path algebras.

Paths act on the left and compose right to left: the word
``("delta", "beta", "alpha")`` applies ``alpha`` first.  Vertices are
numbered from 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


@dataclass(frozen=True)
class Arrow:
    id: str
    source: int
    target: int


@dataclass(frozen=True)
class PathWord:
    """A path in the quiver, stored in written order (last-applied arrow first)."""

    arrows: tuple[str, ...]
    start: int
    end: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    def after(self, other: "PathWord") -> "PathWord":
        """The composite ``self * other`` (apply ``other`` first)."""
        if other.end != self.start:
            raise ValueError(f"cannot compose: {other} ends at {other.end}, {self} starts at {self.start}")
        return PathWord(self.arrows + other.arrows, other.start, self.end)

    def applied_order(self) -> tuple[str, ...]:
        return tuple(reversed(self.arrows))

    def __str__(self) -> str:
        return "".join(self.arrows) if self.arrows else f"e{self.start}"


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...]
    _by_id: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        arrows = tuple(sorted((a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows), key=lambda a: a.id))
        by_id = {}
        for a in arrows:
            if a.id in by_id:
                raise ValueError(f"duplicate arrow id {a.id!r}")
            for v in (a.source, a.target):
                if not 1 <= v <= self.vertex_count:
                    raise ValueError(f"arrow {a.id!r} uses vertex {v} outside 1..{self.vertex_count}")
            by_id[a.id] = a
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "_by_id", by_id)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def arrow_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arrows)

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise KeyError(f"unknown arrow {arrow_id!r}") from None

    def arrows_from(self, vertex: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def path(self, arrows: Iterable[str], start: int | None = None) -> PathWord:
        """Build a path from arrow ids in written order (rightmost applied first)."""
        word = tuple(arrows)
        if not word:
            if start is None:
                raise ValueError("a trivial path needs its vertex")
            return PathWord((), start, start)
        applied = [self.arrow(a) for a in reversed(word)]
        for first, second in zip(applied, applied[1:]):
            if first.target != second.source:
                raise ValueError(f"arrows {first.id!r} and {second.id!r} do not compose")
        if start is not None and applied[0].source != start:
            raise ValueError(f"path does not start at vertex {start}")
        return PathWord(word, applied[0].source, applied[-1].target)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_count, tuple(Arrow(a.id, a.target, a.source) for a in self.arrows))


@dataclass(frozen=True)
class TruncatedAlgebra:
    """The path algebra of ``quiver`` modulo all paths of length ``L + 1``."""

    quiver: Quiver
    L: int

    def __post_init__(self):
        if self.L < 1:
            raise ValueError("truncation index L must be at least 1")

    @property
    def n(self) -> int:
        return self.quiver.vertex_count

    @property
    def is_local(self) -> bool:
        return self.quiver.vertex_count == 1

    @property
    def loop_count(self) -> int:
        return len(self.quiver.arrows)

    def opposite(self) -> "TruncatedAlgebra":
        return TruncatedAlgebra(self.quiver.opposite(), self.L)

    def with_truncation(self, L: int) -> "TruncatedAlgebra":
        return TruncatedAlgebra(self.quiver, L)

    def to_dict(self) -> dict:
        return {
            "vertices": self.quiver.vertex_count,
            "arrows": [{"id": a.id, "from": a.source, "to": a.target} for a in self.quiver.arrows],
            "truncation": self.L,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TruncatedAlgebra":
        try:
            arrows = tuple(Arrow(str(a["id"]), int(a["from"]), int(a["to"])) for a in data["arrows"])
            return cls(Quiver(int(data["vertices"]), arrows), int(data["truncation"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed algebra description: {exc}") from exc


def local_algebra(r: int, L: int) -> TruncatedAlgebra:
    """One vertex with loops ``alpha1 .. alphar``, truncated at length ``L + 1``."""
    if r < 1:
        raise ValueError("a local algebra needs at least one loop")
    if L < 1:
        raise ValueError("truncation index L must be at least 1")
    return TruncatedAlgebra(Quiver(1, tuple(Arrow(f"alpha{i}", 1, 1) for i in range(1, r + 1))), L)


def arrow_multiplicity(quiver: Quiver) -> np.ndarray:
    """Matrix whose ``(i, j)`` entry (0-based) counts arrows from vertex i+1 to j+1."""
    n = quiver.vertex_count
    out = np.zeros((n, n), dtype=np.int64)
    for a in quiver.arrows:
        out[a.source - 1, a.target - 1] += 1
    return out


def nonzero_paths(alg: TruncatedAlgebra, l: int, start: int | None = None) -> list[PathWord]:
    """All paths of length exactly ``l`` (empty when ``l > L``)."""
    if l < 0:
        raise ValueError("path length must be nonnegative")
    if l > alg.L:
        return []
    starts = [start] if start is not None else list(alg.quiver.vertices)
    return [w for s in starts for w in _paths_from(alg.quiver, s, l)]


def words_of_length(quiver: Quiver, l: int) -> list[PathWord]:
    """All composable words of length ``l`` regardless of truncation."""
    return [w for s in quiver.vertices for w in _paths_from(quiver, s, l)]


def _paths_from(quiver: Quiver, start: int, l: int) -> list[PathWord]:
    paths = [PathWord((), start, start)]
    for _ in range(l):
        paths = [PathWord((a.id,) + w.arrows, w.start, a.target) for w in paths for a in quiver.arrows_from(w.end)]
    return paths
