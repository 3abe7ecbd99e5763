"""Acceptance checks with fixed inputs, exact expectations and time limits.

Each ``criterion_*`` function returns a :class:`CriterionResult`; ``run_all``
runs them in order.  The expected values for the worked examples are written
out here as literal data, and the brute-force oracles below do not call into
the code they check.
"""

from __future__ import annotations

import contextlib
import io
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable

import numpy as np

from . import linalg as la
from .algebra import Arrow, Quiver, TruncatedAlgebra, arrow_multiplicity, local_algebra
from .components import (
    full_loewy_report,
    generic_socle_layering,
    local_components,
    minimal_pairs,
    radsoc_candidates,
    sampled_full_loewy,
    satisfies_layer_bounds,
    schur_root,
    schur_root_oracle,
    simple_summand_check,
)
from .deform import GradedMapData, graded_point, push_down_family, tail_extension_family
from .layers import SemisimpleSequence, dominance_leq, enumerate_realizable, pair_leq
from .repmod import (
    FieldSpec,
    ModulePoint,
    check_point,
    conjugate,
    direct_sum,
    dual_module,
    path_nullity,
    radical_layering,
    radsoc_pair,
    socle_layering,
)
from .skeleta import enumerate_skeleta, presentation_template, random_skeleton, sample_module


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title}: {self.detail} ({self.seconds:.2f}s / {self.limit:g}s)"


def _timed(number: int, title: str, limit: float, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = body()
    seconds = time.perf_counter() - start
    if seconds >= limit:
        detail += f"; over the {limit:g}s limit"
    return CriterionResult(number, title, ok and seconds < limit, detail, seconds, limit)


def seq(*layers) -> SemisimpleSequence:
    return SemisimpleSequence(layers)


# -- fixed examples ----------------------------------------------------------------------------------


def four_vertex_example() -> TruncatedAlgebra:
    """Vertices 1..4; alpha: 1->2, epsilon: 1->4, beta: 2->3, gamma: loop at 3, delta: 3->1; L = 3."""
    q = Quiver(4, (Arrow("alpha", 1, 2), Arrow("epsilon", 1, 4), Arrow("beta", 2, 3), Arrow("gamma", 3, 3), Arrow("delta", 3, 1)))
    return TruncatedAlgebra(q, 3)


FOUR_VERTEX_S = seq((1, 1, 0, 0), (0, 1, 1, 1), (0, 0, 2, 0), (1, 0, 1, 0))
FOUR_VERTEX_STATED_SOCLE = seq((1, 0, 2, 1), (0, 0, 2, 0), (0, 2, 0, 0), (1, 0, 0, 0))
# Socle layering of the presented module for generic scalars, from an exact rational computation
FOUR_VERTEX_GENERIC_SOCLE = seq((1, 0, 1, 1), (0, 0, 2, 0), (0, 1, 1, 0), (1, 1, 0, 0))


def zigzag_example() -> TruncatedAlgebra:
    """alpha: 1->2, beta: 2->3, delta: 3->2, gamma: 3->4; L = 3."""
    q = Quiver(4, (Arrow("alpha", 1, 2), Arrow("beta", 2, 3), Arrow("delta", 3, 2), Arrow("gamma", 3, 4)))
    return TruncatedAlgebra(q, 3)


ZIGZAG_S = seq((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
ZIGZAG_SOCLE = seq((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))
ZIGZAG_T = seq((1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 0, 0), (0, 0, 0, 0))
ZIGZAG_T_SOCLE = seq((0, 1, 0, 1), (1, 0, 1, 0), (0, 0, 0, 0), (0, 0, 0, 0))


def push_down_example_module(p: int = la.DEFAULT_PRIME) -> ModulePoint:
    """Three loops, L = 2, layers (2,4,1): tops z1, z2 over y1..y4, and y2, y3, y4 all hit w.

    Basis order z1, z2, y1, y2, y3, y4, w.  y1 is killed by every arrow.
    """
    a = {k: np.zeros((7, 7), dtype=np.int64) for k in ("alpha1", "alpha2", "alpha3")}
    z1, z2, y1, y2, y3, y4, w = range(7)
    a["alpha1"][y1, z1] = a["alpha2"][y2, z1] = a["alpha3"][y3, z1] = 1
    a["alpha1"][y4, z2] = 1
    a["alpha2"][y3, z2] = a["alpha2"][y1, z2] = 1
    a["alpha3"][y2, z2] = a["alpha3"][y4, z2] = 1
    a["alpha2"][w, y2] = a["alpha3"][w, y3] = a["alpha1"][w, y4] = 1
    return ModulePoint(local_algebra(3, 2), (7,), a, FieldSpec(p))


def tail_example_module(p: int = la.DEFAULT_PRIME) -> ModulePoint:
    """Three loops, L = 3, layers (1,2,1,0): alpha2 z = y1, alpha1 z = y2, alpha2 y1 = alpha1 y2 = w."""
    a = {k: np.zeros((4, 4), dtype=np.int64) for k in ("alpha1", "alpha2", "alpha3")}
    z, y1, y2, w = range(4)
    a["alpha2"][y1, z] = a["alpha1"][y2, z] = 1
    a["alpha2"][w, y1] = a["alpha1"][w, y2] = 1
    return ModulePoint(local_algebra(3, 3), (4,), a, FieldSpec(p))


# -- independent oracles -------------------------------------------------------------------------------


def brute_force_bounds(r: int, L: int, d: int) -> list[tuple[int, ...]]:
    """All ``(L+1)``-part compositions of ``d`` obeying both layer inequalities."""
    out = []
    for parts in product(range(d + 1), repeat=L + 1):
        if sum(parts) != d:
            continue
        if all(parts[l] <= r * parts[l - 1] and parts[l - 1] <= r * parts[l] for l in range(1, L + 1)):
            out.append(parts)
    return sorted(out)


def _rows_from_components_table(text: str) -> list[tuple[int, ...]]:
    rows = []
    for line in text.splitlines():
        if line.startswith("(") and "|" in line:
            cell = line.split("|")[0].strip()
            rows.append(tuple(int(x) for x in cell.strip("()").split(",")))
    return rows


# -- random corpus -----------------------------------------------------------------------------------


def random_algebra(rng: np.random.Generator) -> TruncatedAlgebra:
    n = int(rng.integers(1, 5))
    count = int(rng.integers(1, 6))
    arrows = []
    for k in range(count):
        s, t = (int(x) for x in rng.integers(1, n + 1, size=2))
        arrows.append(Arrow(f"a{k}", s, t))
    return TruncatedAlgebra(Quiver(n, tuple(arrows)), int(rng.integers(1, 5)))


def random_realizable(alg: TruncatedAlgebra, rng: np.random.Generator, max_dim: int = 8) -> SemisimpleSequence:
    """Random sequence built layer by layer under the realizability bounds."""
    mult = arrow_multiplicity(alg.quiver)
    budget = int(rng.integers(1, max_dim + 1))
    first = np.zeros(alg.n, dtype=np.int64)
    first[int(rng.integers(0, alg.n))] = 1
    budget -= 1
    for _ in range(budget):
        if rng.random() < 0.3:
            first[int(rng.integers(0, alg.n))] += 1
            budget -= 1
    layers = [first]
    for _ in range(alg.L):
        cap = layers[-1] @ mult
        nxt = np.zeros(alg.n, dtype=np.int64)
        for i in rng.permutation(alg.n):
            if budget <= 0:
                break
            take = int(rng.integers(0, min(int(cap[i]), budget) + 1))
            nxt[i] = take
            budget -= take
        layers.append(nxt)
    return SemisimpleSequence(tuple(tuple(int(x) for x in layer) for layer in layers))


def _random_graded(alg: TruncatedAlgebra, rng: np.random.Generator, p: int) -> ModulePoint:
    S = random_realizable(alg, rng)
    density = rng.random()
    blocks = {}
    for a in alg.quiver.arrows:
        per = {}
        for l in range(alg.L + 1):
            for u in range(l + 1, alg.L + 1):
                shape = (S[u][a.target - 1], S[l][a.source - 1])
                m = la.random_matrix(rng, shape, p) * (rng.random(shape) < density)
                per[(l, u)] = m
        blocks[a.id] = per
    return graded_point(GradedMapData(alg, S.layers, blocks, p))


def _random_presented(alg: TruncatedAlgebra, rng: np.random.Generator, p: int) -> ModulePoint:
    S = random_realizable(alg, rng)
    tpl = presentation_template(random_skeleton(alg, S, rng))
    c = la.random_matrix(rng, (tpl.N,), p) * (rng.random(tpl.N) < rng.random())
    return tpl.realize(c, p)


def _scramble(M: ModulePoint, rng: np.random.Generator) -> ModulePoint:
    change = {v: la.random_invertible(rng, M.dims[v - 1], M.p) for v in M.alg.quiver.vertices}
    return conjugate(M, change)


@lru_cache(maxsize=4)
def random_corpus(seed: int = 0, algebras: int = 24, per_algebra: int = 45, p: int = la.DEFAULT_PRIME) -> tuple:
    """Modules over random algebras (at most 4 vertices, L <= 4, dimension <= 8)."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(algebras):
        alg = random_algebra(rng)
        for k in range(per_algebra):
            kind = k % 3
            if kind == 0:
                M = _random_presented(alg, rng, p)
            elif kind == 1:
                M = _random_graded(alg, rng, p)
            else:
                M = _random_presented(alg, rng, p)
                N = _random_graded(alg, rng, p)
                if M.dim + N.dim <= 8:
                    M = direct_sum(M, N)
            out.append(_scramble(M, rng))
    return tuple(out)


# -- criteria ------------------------------------------------------------------------------------------


def criterion_1() -> CriterionResult:
    def body():
        from .cli import main

        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(["components", "--local", "3", "2", "-d", "10"])
        rows = _rows_from_components_table(buf.getvalue())
        expected = brute_force_bounds(3, 2, 10)
        ok = code == 0 and len(rows) == 17 and sorted(rows) == expected
        return ok, f"{len(rows)} components, brute force {len(expected)}, sets equal: {sorted(rows) == expected}"

    return _timed(1, "component count for three loops, L=2, d=10", 1.0, body)


def criterion_2(trials: int = 25) -> CriterionResult:
    def body():
        bad = []
        cases = 0
        for r, L in product((2, 3), range(1, 5)):
            alg = local_algebra(r, L)
            for d in range(1, L + 2):
                cases += 1
                comps = local_components(r, L, d)
                S = SemisimpleSequence.from_local([1] * d + [0] * (L + 1 - d))
                if len(comps) != 1 or comps[0].S != S:
                    bad.append((r, L, d, "classification"))
                    continue
                rng = np.random.default_rng([r, L, d])
                for _ in range(trials):
                    M = sample_module(alg, S, rng, skeleton="random")
                    if radical_layering(M) != S or socle_layering(M) != S:
                        bad.append((r, L, d, "sample"))
                        break
        return not bad, f"{cases} cases, {len(bad)} failures" + (f": {bad[:3]}" if bad else "")

    return _timed(2, "small dimension gives one uniserial component", 5.0, body)


def criterion_3(trials: int = 25) -> CriterionResult:
    def body():
        mismatches = []
        cases = 0
        for r, L in product((2, 3), (1, 2, 3)):
            alg = local_algebra(r, L)
            for d in range(L + 2, L + 7):
                cases += 1
                seqs = enumerate_realizable(alg, (d,))
                bounds = {S for S in seqs if satisfies_layer_bounds(r, S.layer_dims())}
                cands = radsoc_candidates(alg, (d,), trials=trials)
                minimal = {c.rad for c in minimal_pairs(cands)}
                reversed_socle = {c.rad for c in cands if c.soc == c.rad.reverse()}
                if not bounds == minimal == reversed_socle:
                    mismatches.append((r, L, d))
        return not mismatches, f"{cases} (r,L,d) cases, {len(mismatches)} mismatches" + (f": {mismatches}" if mismatches else "")

    return _timed(3, "layer bounds = minimal pairs = reversed generic socle", 120.0, body)


def criterion_4(trials: int = 25) -> CriterionResult:
    def body():
        alg = four_vertex_example()
        count = len(enumerate_skeleta(alg, FOUR_VERTEX_S))
        soc = generic_socle_layering(alg, FOUR_VERTEX_S, trials)
        mins = minimal_pairs(radsoc_candidates(alg, (2, 2, 4, 1), trials=trials))
        stated_pair = any(m.rad == FOUR_VERTEX_S and m.soc == FOUR_VERTEX_STATED_SOCLE for m in mins)
        sampled_pair = any(m.rad == FOUR_VERTEX_S and m.soc == soc for m in mins)
        ok = count == 4 and soc == FOUR_VERTEX_STATED_SOCLE and stated_pair
        detail = (
            f"{count} skeleta; generic socle {soc} vs expected {FOUR_VERTEX_STATED_SOCLE}; "
            f"expected pair minimal: {stated_pair}; sampled pair minimal: {sampled_pair}"
        )
        return ok, detail

    return _timed(4, "four-vertex example: skeleta, generic socle, minimal pair", 10.0, body)


def criterion_5() -> CriterionResult:
    def body():
        corpus = random_corpus()
        algebras = len({M.alg for M in corpus})
        bad = 0
        for M in corpus:
            S, T = radsoc_pair(M)
            if not (dominance_leq(S.reverse(), T) and dominance_leq(T.reverse(), S)):
                bad += 1
        return bad == 0 and len(corpus) >= 1000 and algebras >= 20, f"{len(corpus)} modules over {algebras} algebras, {bad} violations"

    return _timed(5, "reversed layerings bound each other", 60.0, body)


def criterion_6() -> CriterionResult:
    def body():
        corpus = random_corpus()
        disagree = 0
        hits = 0
        for M in corpus:
            a, c, _ = simple_summand_check(M)
            disagree += a != c
            hits += a
        return disagree == 0, f"{len(corpus)} modules, {hits} with a simple summand, {disagree} disagreements"

    return _timed(6, "socle mismatch iff simple summand in a two-layer subfactor", 60.0, body)


def _family_ok(M: ModulePoint, fam, rng: np.random.Generator, points: int = 20) -> tuple[bool, str]:
    p = M.p
    base_ok = fam.evaluate(0) == fam.base and conjugate(M, {1: la.inverse(fam.change_of_basis, p)}) == fam.base
    zero_pair = radsoc_pair(fam.evaluate(0))
    bad = 0
    for t in rng.integers(1, p, size=points):
        D = fam.evaluate(int(t))
        pair = radsoc_pair(D)
        if check_point(D) or pair[0] != fam.target_S or not pair_leq(pair, zero_pair):
            bad += 1
    return base_ok and bad == 0, f"{radical_layering(M)} -> {fam.target_S}, {bad} bad of {points}"


def criterion_7() -> CriterionResult:
    def body():
        rng = np.random.default_rng(7)
        details = []
        ok = True
        generic = sample_module(local_algebra(3, 2), SemisimpleSequence.from_local([2, 4, 1]), 7)
        for name, M in (("explicit", push_down_example_module()), ("sampled", generic)):
            fam = push_down_family(M, 1)
            good, text = _family_ok(M, fam, rng)
            ok &= good and fam.target_S == SemisimpleSequence.from_local([2, 3, 2])
            details.append(f"{name} {text}")
        M = tail_example_module()
        fam = tail_extension_family(M)
        good, text = _family_ok(M, fam, rng)
        ok &= good and fam.target_S == SemisimpleSequence.from_local([1, 1, 1, 1])
        details.append(text)
        return ok, "; ".join(details)

    return _timed(7, "deformation families reach their target layerings", 5.0, body)


def criterion_8(trials: int = 40) -> CriterionResult:
    def body():
        disagreements = []
        for r, a, b in product((2, 3), range(1, 7), range(1, 7)):
            if schur_root(r, a, b) != schur_root_oracle(r, a, b, trials=trials):
                disagreements.append((r, a, b))
        anchors = schur_root(2, 2, 2) is False and schur_root(3, 2, 2) is True
        return not disagreements and anchors, f"72 grid points, {len(disagreements)} disagreements; (2,2): r=2 {schur_root(2, 2, 2)}, r=3 {schur_root(3, 2, 2)}"

    return _timed(8, "Schur-root closed form matches the endomorphism oracle", 120.0, body)


def criterion_9(trials: int = 25) -> CriterionResult:
    def body():
        parts = []
        ok = True
        for r, L, d in ((2, 2, 6), (3, 2, 10)):
            report = full_loewy_report(r, L, d, trials=trials)
            passing = sum(v for _, v in report)
            ok &= passing == len(report)
            parts.append(f"({r},{L},{d}): {passing}/{len(report)} components pass")
        alg = local_algebra(2, 2)
        S = SemisimpleSequence.from_local([4, 1, 1])
        failing = sum(
            not sampled_full_loewy(alg, S, trials=1, seed=k) for k in range(trials)
        )
        ok &= failing == trials
        parts.append(f"(4,1,1) with two loops: {failing}/{trials} samples fail")
        return ok, "; ".join(parts)

    return _timed(9, "full Loewy support on every component", 30.0, body)


def criterion_10(trials: int = 25) -> CriterionResult:
    def body():
        alg = zigzag_example()
        soc = generic_socle_layering(alg, ZIGZAG_S, trials)
        soc_t = generic_socle_layering(alg, ZIGZAG_T, trials)
        first = (ZIGZAG_S, soc)
        second = (ZIGZAG_T, soc_t)
        strict = pair_leq(first, second) and first != second
        delta = alg.quiver.path(["delta"])
        nul = min(path_nullity(sample_module(alg, ZIGZAG_S, k), delta) for k in range(trials))
        nul_t = min(path_nullity(sample_module(alg, ZIGZAG_T, k), delta) for k in range(trials))
        ok = soc == ZIGZAG_SOCLE and soc_t == ZIGZAG_T_SOCLE and strict and (nul, nul_t) == (4, 3)
        return ok, f"socles {soc} and {soc_t}, strictly smaller: {strict}, delta nullities {nul} vs {nul_t}"

    return _timed(10, "zigzag example: pairs and delta nullity", 10.0, body)


def criterion_11(draws: int = 500) -> CriterionResult:
    def body():
        rng = np.random.default_rng(11)
        bad = 0
        algebras = [random_algebra(rng) for _ in range(25)]
        for k in range(draws):
            alg = algebras[k % len(algebras)]
            S = random_realizable(alg, rng)
            tpl = presentation_template(random_skeleton(alg, S, rng))
            c = la.random_matrix(rng, (tpl.N,), la.DEFAULT_PRIME) * (rng.random(tpl.N) < rng.random())
            M = tpl.realize(c)
            if check_point(M) or radical_layering(M) != S:
                bad += 1
        return bad == 0, f"{draws} draws, {bad} failures"

    return _timed(11, "presented modules have the skeleton's layering", 30.0, body)


def criterion_12() -> CriterionResult:
    def body():
        corpus = random_corpus()
        bad = sum(socle_layering(M) != radical_layering(dual_module(M)) for M in corpus)
        return bad == 0, f"{len(corpus)} modules, {bad} violations"

    return _timed(12, "socle layering equals radical layering of the dual", 60.0, body)


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
)


def run_all(echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    results = []
    for fn in CRITERIA:
        res = fn()
        results.append(res)
        if echo is not None:
            echo(res.line())
    return results
