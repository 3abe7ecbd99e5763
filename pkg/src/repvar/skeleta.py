"""Skeleta, their critical paths, and modules presented by scalar families.

A skeleton is a layered forest of paths ``p z_r`` in a projective cover
``P = sum Lambda z_r``, closed under initial subpaths, whose length/endpoint
profile matches a semisimple sequence.  Its critical paths (one arrow past
the forest) carry the relations of the presented module; each critical path
rewrites to a combination of forest members of at least its own length that
end at the same vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from . import linalg as la
from .algebra import PathWord, TruncatedAlgebra
from .layers import SemisimpleSequence, realizable
from .repmod import FieldSpec, ModulePoint

Member = tuple[int, tuple[str, ...]]  # (root index from 1, arrows in written order)


@dataclass(frozen=True)
class Skeleton:
    """Roots ``z_1 .. z_t`` (their vertices) and the member paths."""

    alg: TruncatedAlgebra
    roots: tuple[int, ...]
    members: tuple[Member, ...]
    _word: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        words = {}
        for r, arrows in self.members:
            words[(r, arrows)] = self.alg.quiver.path(arrows, start=self.roots[r - 1])
        members = tuple(sorted(words, key=_canonical_key))
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_word", words)

    def word(self, member: Member) -> PathWord:
        return self._word[member]

    def __contains__(self, member: Member) -> bool:
        return member in self._word

    def layer_profile(self) -> SemisimpleSequence:
        layers = np.zeros((self.alg.L + 1, self.alg.n), dtype=np.int64)
        for m in self.members:
            w = self._word[m]
            layers[w.length, w.end - 1] += 1
        return SemisimpleSequence(tuple(map(tuple, layers.tolist())))

    def is_closed(self) -> bool:
        """Every proper initial subpath of a member is a member."""
        return all((r, arrows[1:]) in self._word for r, arrows in self.members if arrows)

    def label(self, member: Member) -> str:
        r, arrows = member
        return " ".join(arrows + (f"z{r}",))

    def to_dict(self) -> dict:
        return {"roots": list(self.roots), "paths": [[r, list(arrows)] for r, arrows in self.members]}

    @classmethod
    def from_dict(cls, alg: TruncatedAlgebra, data: dict) -> "Skeleton":
        roots = tuple(int(v) for v in data["roots"])
        members = tuple((int(r), tuple(str(a) for a in arrows)) for r, arrows in data["paths"])
        return cls(alg, roots, members)

    def render(self) -> str:
        """Indented forest, one tree per root; children in canonical order."""
        lines = []
        children: dict[Member, list[Member]] = {}
        for m in self.members:
            if m[1]:
                children.setdefault((m[0], m[1][1:]), []).append(m)

        def walk(m: Member, depth: int) -> None:
            suffix = f" @{self.roots[m[0] - 1]}" if depth == 0 else ""
            lines.append("  " * depth + self.label(m) + suffix)
            for child in children.get(m, []):
                walk(child, depth + 1)

        for r in range(1, len(self.roots) + 1):
            walk((r, ()), 0)
        return "\n".join(lines)

    @classmethod
    def parse(cls, alg: TruncatedAlgebra, text: str) -> "Skeleton":
        roots: dict[int, int] = {}
        members = []
        for raw in text.splitlines():
            if not raw.strip():
                continue
            tokens = raw.split()
            if tokens[-1].startswith("@"):
                vertex = int(tokens[-1][1:])
                tokens = tokens[:-1]
                roots[int(tokens[-1][1:])] = vertex
            if not tokens[-1].startswith("z"):
                raise ValueError(f"forest line {raw!r} does not end in a root name")
            members.append((int(tokens[-1][1:]), tuple(tokens[:-1])))
        if sorted(roots) != list(range(1, len(roots) + 1)):
            raise ValueError("roots must be numbered 1..t with their vertices marked")
        return cls(alg, tuple(roots[r] for r in sorted(roots)), tuple(members))


def _canonical_key(member: Member):
    r, arrows = member
    return (len(arrows), r, arrows)


def _roots_for(S: SemisimpleSequence) -> tuple[int, ...]:
    return tuple(v for v in range(1, S.n + 1) for _ in range(S[0][v - 1]))


def _layer_choices(alg: TruncatedAlgebra, skeleton_layer: list[tuple[Member, int]], want: tuple[int, ...]):
    """Per-vertex candidate lists one arrow beyond ``skeleton_layer``."""
    by_vertex: dict[int, list[tuple[Member, int]]] = {v: [] for v in alg.quiver.vertices}
    for (r, arrows), end in skeleton_layer:
        for a in alg.quiver.arrows_from(end):
            by_vertex[a.target].append(((r, (a.id,) + arrows), a.target))
    return [(by_vertex[v], want[v - 1]) for v in alg.quiver.vertices]


def iter_skeleta(alg: TruncatedAlgebra, S: SemisimpleSequence) -> Iterator[Skeleton]:
    """Skeleta with layer profile ``S`` in deterministic depth-first order."""
    if not realizable(alg, S):
        return
    roots = _roots_for(S)
    first = [((r, ()), v) for r, v in enumerate(roots, start=1)]

    def extend(layers: list[list[tuple[Member, int]]]) -> Iterator[list[list[tuple[Member, int]]]]:
        l = len(layers)
        if l == alg.L + 1:
            yield layers
            return
        choices = _layer_choices(alg, layers[-1], S[l])
        if any(len(cands) < k for cands, k in choices):
            return
        for picks in product(*(combinations(cands, k) for cands, k in choices)):
            yield from extend(layers + [[m for pick in picks for m in pick]])

    for layers in extend([first]):
        yield Skeleton(alg, roots, tuple(m for layer in layers for m, _ in layer))


def enumerate_skeleta(alg: TruncatedAlgebra, S: SemisimpleSequence) -> list[Skeleton]:
    """All skeleta with layer profile ``S``; empty when ``S`` is not realizable."""
    return list(iter_skeleta(alg, S))


def first_skeleton(alg: TruncatedAlgebra, S: SemisimpleSequence) -> Skeleton:
    for sk in iter_skeleta(alg, S):
        return sk
    raise ValueError(f"sequence {S} is not realizable")


def random_skeleton(alg: TruncatedAlgebra, S: SemisimpleSequence, rng: np.random.Generator) -> Skeleton:
    """A skeleton chosen by random subsets layer by layer (not uniform over all skeleta)."""
    if not realizable(alg, S):
        raise ValueError(f"sequence {S} is not realizable")
    roots = _roots_for(S)
    layer = [((r, ()), v) for r, v in enumerate(roots, start=1)]
    members = [m for m, _ in layer]
    for l in range(1, alg.L + 1):
        nxt = []
        for cands, k in _layer_choices(alg, layer, S[l]):
            idx = sorted(rng.choice(len(cands), size=k, replace=False).tolist()) if k else []
            nxt.extend(cands[i] for i in idx)
        layer = nxt
        members.extend(m for m, _ in layer)
    return Skeleton(alg, roots, tuple(members))


@dataclass(frozen=True)
class PresentationTemplate:
    """Critical paths of a skeleton with their eligible rewriting targets."""

    skeleton: Skeleton
    criticals: tuple[Member, ...]
    eligible: dict
    pairs: tuple[tuple[Member, Member], ...]

    @property
    def N(self) -> int:
        return len(self.pairs)

    @cached_property
    def _layout(self):
        sk = self.skeleton
        alg = sk.alg
        n = alg.n
        order = sorted(sk.members, key=lambda m: (sk.word(m).end, _canonical_key(m)))
        dims = [0] * n
        position = {}
        for m in order:
            v = sk.word(m).end
            position[m] = dims[v - 1]
            dims[v - 1] += 1
        base = {a.id: np.zeros((dims[a.target - 1], dims[a.source - 1]), dtype=np.int64) for a in alg.quiver.arrows}
        entries = {a.id: ([], [], []) for a in alg.quiver.arrows}
        pair_index = {pair: k for k, pair in enumerate(self.pairs)}
        for m in sk.members:
            w = sk.word(m)
            if w.length >= alg.L:
                continue
            for a in alg.quiver.arrows_from(w.end):
                ext = (m[0], (a.id,) + m[1])
                col = position[m]
                if ext in sk:
                    base[a.id][position[ext], col] = 1
                    continue
                for target in self.eligible[ext]:
                    rows, cols, idx = entries[a.id]
                    rows.append(position[target])
                    cols.append(col)
                    idx.append(pair_index[(ext, target)])
        entries = {k: tuple(np.array(x, dtype=np.int64) for x in v) for k, v in entries.items()}
        return tuple(dims), base, entries, tuple(order)

    @property
    def basis(self) -> tuple[Member, ...]:
        """Skeleton members in module-basis order (vertex blocks, canonical within a block)."""
        return self._layout[3]

    def realize(self, c: Sequence[int], p: int = la.DEFAULT_PRIME) -> ModulePoint:
        """The module ``P / U(c)`` on basis ``sigma``."""
        c = np.asarray(c, dtype=np.int64).reshape(-1)
        if c.shape[0] != self.N:
            raise ValueError(f"expected {self.N} scalars, got {c.shape[0]}")
        c = c % p
        dims, base, entries, _ = self._layout
        mats = {}
        for aid, m in base.items():
            m = m.copy()
            rows, cols, idx = entries[aid]
            if len(idx):
                np.add.at(m, (rows, cols), c[idx])
                m %= p
            mats[aid] = m
        return ModulePoint(self.skeleton.alg, dims, mats, FieldSpec(p))


def presentation_template(skeleton: Skeleton) -> PresentationTemplate:
    alg = skeleton.alg
    criticals = []
    for m in skeleton.members:
        w = skeleton.word(m)
        if w.length >= alg.L:
            continue
        for a in alg.quiver.arrows_from(w.end):
            ext = (m[0], (a.id,) + m[1])
            if ext not in skeleton:
                criticals.append(ext)
    criticals.sort(key=_canonical_key)
    eligible = {}
    pairs = []
    for u in criticals:
        length = len(u[1])
        end = alg.quiver.arrow(u[1][0]).target
        targets = tuple(
            m for m in skeleton.members if len(m[1]) >= length and skeleton.word(m).end == end
        )
        eligible[u] = targets
        pairs.extend((u, q) for q in targets)
    return PresentationTemplate(skeleton, tuple(criticals), eligible, tuple(pairs))


def sample_module(
    alg: TruncatedAlgebra,
    S: SemisimpleSequence,
    seed=0,
    p: int = la.DEFAULT_PRIME,
    skeleton: str = "first",
) -> ModulePoint:
    """A random point of the stratum with radical layering ``S``.

    ``skeleton`` is ``"first"`` (the first skeleton in enumeration order) or
    ``"random"``.  ``seed`` may be an int, a SeedSequence or a Generator.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if skeleton == "first":
        sk = first_skeleton(alg, S)
    elif skeleton == "random":
        sk = random_skeleton(alg, S, rng)
    else:
        raise ValueError(f"unknown skeleton choice {skeleton!r}")
    tpl = presentation_template(sk)
    return tpl.realize(la.random_matrix(rng, (tpl.N,), p), p)
