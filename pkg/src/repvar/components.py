"""Irreducible components of module varieties over truncated path algebras.

Local algebras (one vertex, ``r >= 2`` loops) are classified exactly by the
two-sided layer bounds ``S_l <= r S_{l-1}`` and ``S_{l-1} <= r S_l``.  For
general truncated algebras the component layerings are approached through
minimal (radical, socle) pairs, with generic socle layerings estimated by
random points of each stratum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import linalg as la
from .algebra import Arrow, Quiver, TruncatedAlgebra, local_algebra
from .layers import SemisimpleSequence, dominance_leq, enumerate_realizable, pair_leq
from .repmod import (
    FieldSpec,
    ModulePoint,
    endomorphism_dimension,
    loewy_full_support_check,
    radical_layering,
    simple_summand_ranks,
    socle_layering,
)
from .skeleta import enumerate_skeleta, first_skeleton, presentation_template

TRIAL_CAP = 400


class LayeredPair(NamedTuple):
    rad: SemisimpleSequence
    soc: SemisimpleSequence


@dataclass(frozen=True)
class ComponentDescriptor:
    S: SemisimpleSequence
    generic_socle: SemisimpleSequence
    two_sided_bounds: bool
    minimal_pair: bool
    schur_hint: int | None
    trials_used: int
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "S": self.S.to_list(),
            "generic_socle": self.generic_socle.to_list(),
            "two_sided_bounds": self.two_sided_bounds,
            "minimal_pair": self.minimal_pair,
            "schur_hint": self.schur_hint,
            "trials_used": self.trials_used,
            "note": self.note,
        }


# -- local classification ---------------------------------------------------------------------


def satisfies_layer_bounds(r: int, dims: Sequence[int]) -> bool:
    """``dims[l] <= r dims[l-1]`` and ``dims[l-1] <= r dims[l]`` for every ``l``."""
    return all(b <= r * a and a <= r * b for a, b in zip(dims, dims[1:]))


def _local_dims(S) -> tuple[int, ...]:
    if isinstance(S, SemisimpleSequence):
        return S.layer_dims()
    return tuple(int(x) for x in S)


def is_component_layering(r: int, L: int, S) -> bool:
    """Whether the local sequence ``S`` is the generic radical layering of a component.

    Only valid in the regime ``r >= 2`` and total dimension above ``L + 1``.
    """
    dims = _local_dims(S)
    if r < 2:
        raise ValueError("needs at least two loops")
    if len(dims) != L + 1:
        raise ValueError(f"sequence needs {L + 1} layers")
    if sum(dims) <= L + 1:
        raise ValueError("total dimension at most L+1: the variety is irreducible")
    return satisfies_layer_bounds(r, dims)


def uniserial_sequence(L: int, d: int) -> SemisimpleSequence:
    return SemisimpleSequence.from_local([1] * d + [0] * (L + 1 - d))


def local_components(
    r: int,
    L: int,
    d: int,
    *,
    verify: bool = False,
    trials: int = 25,
    seed: int = 0,
    p: int = la.DEFAULT_PRIME,
) -> list[ComponentDescriptor]:
    """Component records for the local truncated algebra with ``r`` loops.

    Without ``verify`` the records follow from the layer bounds alone and no
    sampling happens (``trials_used`` is 0).  With ``verify`` each generic
    socle layering is estimated by sampling instead.
    """
    if r < 1 or L < 1 or d < 1:
        raise ValueError("need r, L, d >= 1")
    alg = local_algebra(r, L)
    if r == 1:
        q, rem = divmod(d, L + 1)
        S = SemisimpleSequence.from_local([q + (1 if l < rem else 0) for l in range(L + 1)])
        soc = generic_socle_layering(alg, S, trials, seed, p) if verify else S
        return [ComponentDescriptor(S, soc, False, True, None, trials if verify else 0, "one loop: the variety is irreducible")]
    if d <= L + 1:
        S = uniserial_sequence(L, d)
        soc = generic_socle_layering(alg, S, trials, seed, p) if verify else S
        return [ComponentDescriptor(S, soc, False, True, kronecker_schur_hint(r, S), trials if verify else 0, "generically uniserial")]
    out = []
    for S in enumerate_realizable(alg, (d,)):
        if not satisfies_layer_bounds(r, S.layer_dims()):
            continue
        soc = generic_socle_layering(alg, S, trials, seed, p) if verify else S.reverse()
        out.append(ComponentDescriptor(S, soc, True, True, kronecker_schur_hint(r, S), trials if verify else 0))
    return out


# -- sampling-based genericity ------------------------------------------------------------------


def _trial_rng(seed: int, k: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(k)])


def _dominance_minimum(values: list[SemisimpleSequence]) -> SemisimpleSequence | None:
    distinct = sorted(set(values))
    for v in distinct:
        if all(dominance_leq(v, w) for w in distinct):
            return v
    return None


def generic_socle_layering(
    alg: TruncatedAlgebra,
    S: SemisimpleSequence,
    trials: int = 25,
    seed: int = 0,
    p: int = la.DEFAULT_PRIME,
    *,
    return_trials: bool = False,
    all_skeleta: bool = False,
):
    """Dominance-minimum of the socle layering over random points of the stratum ``S``.

    Trials use the first skeleton, or cycle through every skeleton when
    ``all_skeleta`` is set.  Sampling stops early once the reversed sequence
    is observed, since no module with radical layering ``S`` has a smaller
    socle layering.  If the observed values have no common lower bound, the
    trial count doubles up to ``TRIAL_CAP`` before giving up.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if all_skeleta:
        templates = [presentation_template(sk) for sk in enumerate_skeleta(alg, S)]
        if not templates:
            raise ValueError(f"sequence {S} is not realizable")
    else:
        templates = [presentation_template(first_skeleton(alg, S))]
    floor = S.reverse()
    values: list[SemisimpleSequence] = []
    budget = trials
    k = 0
    while True:
        while k < budget:
            rng = _trial_rng(seed, k)
            tpl = templates[k % len(templates)]
            soc = socle_layering(tpl.realize(la.random_matrix(rng, (tpl.N,), p), p))
            k += 1
            if soc == floor:
                return (floor, k) if return_trials else floor
            values.append(soc)
        best = _dominance_minimum(values)
        if best is not None:
            return (best, k) if return_trials else best
        if budget >= TRIAL_CAP:
            raise RuntimeError(f"socle layerings for {S} stayed incomparable after {k} trials")
        budget = min(2 * budget, TRIAL_CAP)


def minimal_pairs(pairs: Sequence[LayeredPair]) -> list[LayeredPair]:
    """Minimal elements under componentwise dominance, in input order."""
    out = []
    for a in pairs:
        if not any(b != a and pair_leq(b, a) for b in pairs):
            out.append(a)
    return out


def radsoc_candidates(
    alg: TruncatedAlgebra, d: Sequence[int], trials: int = 25, seed: int = 0, p: int = la.DEFAULT_PRIME
) -> list[LayeredPair]:
    """``(S, generic socle of S)`` for every realizable ``S`` with total ``d``."""
    return [LayeredPair(S, generic_socle_layering(alg, S, trials, seed, p)) for S in enumerate_realizable(alg, d)]


def minimal_radsoc_candidates(
    alg: TruncatedAlgebra, d: Sequence[int], trials: int = 25, seed: int = 0, p: int = la.DEFAULT_PRIME
) -> list[LayeredPair]:
    return minimal_pairs(radsoc_candidates(alg, d, trials, seed, p))


# -- Kronecker Schur roots ----------------------------------------------------------------------


def schur_root(r: int, a: int, b: int) -> bool:
    """Closed-form Schur-root test for the Kronecker quiver with ``r`` arrows."""
    if r < 1 or a < 0 or b < 0 or (a, b) == (0, 0):
        raise ValueError("need r >= 1 and a nonzero dimension vector")
    if min(a, b) == 0:
        return max(a, b) == 1
    if r == 1:
        return (a, b) == (1, 1)
    if r == 2:
        return abs(a - b) == 1 or (a, b) == (1, 1)
    if a * a + b * b - r * a * b < 0:
        return True
    x, y = 0, 1
    while y <= max(a, b):
        if (a, b) in ((x, y), (y, x)):
            return True
        x, y = y, r * y - x
    return False


def kronecker_algebra(r: int) -> TruncatedAlgebra:
    return TruncatedAlgebra(Quiver(2, tuple(Arrow(f"alpha{i}", 1, 2) for i in range(1, r + 1))), 1)


def schur_root_oracle(r: int, a: int, b: int, trials: int = 40, seed: int = 0, p: int = la.DEFAULT_PRIME) -> bool:
    """Schur iff the smallest endomorphism dimension over random representations is 1."""
    alg = kronecker_algebra(r)
    best = None
    for k in range(trials):
        rng = _trial_rng(seed, k)
        mats = {a_.id: la.random_matrix(rng, (b, a), p) for a_ in alg.quiver.arrows}
        e = endomorphism_dimension(ModulePoint(alg, (a, b), mats, FieldSpec(p)))
        best = e if best is None else min(best, e)
        if best == 1:
            break
    return best == 1


def kronecker_schur_hint(r: int, S) -> int | None:
    """Smallest ``l >= 1`` with ``(dim S_{l-1}, dim S_l)`` a Schur root, else ``None``."""
    dims = _local_dims(S)
    for l in range(1, len(dims)):
        if (dims[l - 1], dims[l]) != (0, 0) and schur_root(r, dims[l - 1], dims[l]):
            return l
    return None


# -- simple summands and full Loewy support -------------------------------------------------------


def simple_summand_check(M: ModulePoint) -> tuple[bool, bool, int | None]:
    """``(a, c, witness)`` where ``a`` compares the socle layering with the reversed
    radical layering and ``c`` asks for a simple summand of some ``J^rho M / J^{rho+2} M``."""
    a = socle_layering(M) != radical_layering(M).reverse()
    ranks = simple_summand_ranks(M)
    witness = next((rho for rho, hit in enumerate(ranks) if hit), None)
    return a, witness is not None, witness


def full_loewy_report(
    r: int, L: int, d: int, trials: int = 25, seed: int = 0, p: int = la.DEFAULT_PRIME
) -> list[tuple[SemisimpleSequence, bool]]:
    """For each component, whether every sampled module has ``J^L x != 0`` off ``JM``."""
    if r < 2 or d <= L + 1:
        raise ValueError("needs r >= 2 and d > L + 1")
    alg = local_algebra(r, L)
    return [(c.S, sampled_full_loewy(alg, c.S, trials, seed, p)) for c in local_components(r, L, d)]


def sampled_full_loewy(
    alg: TruncatedAlgebra, S: SemisimpleSequence, trials: int = 25, seed: int = 0, p: int = la.DEFAULT_PRIME
) -> bool:
    tpl = presentation_template(first_skeleton(alg, S))
    return all(
        loewy_full_support_check(tpl.realize(la.random_matrix(_trial_rng(seed, k), (tpl.N,), p), p))
        for k in range(trials)
    )


__all__ = [
    "ComponentDescriptor",
    "LayeredPair",
    "full_loewy_report",
    "generic_socle_layering",
    "is_component_layering",
    "kronecker_algebra",
    "kronecker_schur_hint",
    "local_components",
    "minimal_pairs",
    "minimal_radsoc_candidates",
    "radsoc_candidates",
    "sampled_full_loewy",
    "satisfies_layer_bounds",
    "schur_root",
    "schur_root_oracle",
    "simple_summand_check",
    "uniserial_sequence",
]
