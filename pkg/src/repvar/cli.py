"""Command-line front end: ``repvar <verb> [options]``.

Every run is deterministic given its arguments; all randomness derives from
``--seed``.  Exit status: 0 on success, 1 when a requested check fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import linalg as la
from .algebra import TruncatedAlgebra, local_algebra
from .components import (
    generic_socle_layering,
    local_components,
    minimal_pairs,
    radsoc_candidates,
    satisfies_layer_bounds,
    schur_root,
    schur_root_oracle,
)
from .deform import push_down_family, tail_extension_family
from .layers import SemisimpleSequence, enumerate_realizable, realizable
from .repmod import ModulePoint, check_point, radsoc_pair
from .skeleta import enumerate_skeleta, sample_module

VERBS = (
    "components",
    "sequences",
    "skeleta",
    "sample",
    "layering",
    "socle-generic",
    "minimal-pairs",
    "schur",
    "deform",
    "check",
    "selftest",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--algebra", metavar="PATH", help="algebra JSON file")
    common.add_argument("--local", nargs=2, type=int, metavar=("R", "L"), help="one vertex with R loops, truncation L")
    common.add_argument("-d", "--dim", help="dimension: an integer, or a vector like 2,2,4,1")
    common.add_argument("--sequence", metavar="PATH", help="semisimple sequence JSON file (or an inline JSON list)")
    common.add_argument("--module", metavar="PATH", help="module JSON file")
    common.add_argument("--trials", type=int, default=25)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-p", "--prime", type=int, default=la.DEFAULT_PRIME)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = _Parser(prog="repvar", description="Components of module varieties over truncated path algebras.")
    sub = parser.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True
    comp = sub.add_parser("components", parents=[common], help="classify irreducible components")
    comp.add_argument("--verify", action="store_true", help="estimate generic socle layerings by sampling")
    sub.add_parser("sequences", parents=[common], help="list realizable sequences of a dimension")
    sub.add_parser("skeleta", parents=[common], help="list the skeleta of a sequence")
    sub.add_parser("sample", parents=[common], help="random module with a given radical layering")
    sub.add_parser("layering", parents=[common], help="radical and socle layering of a module")
    soc = sub.add_parser("socle-generic", parents=[common], help="generic socle layering of a sequence")
    soc.add_argument("--all-skeleta", action="store_true", help="cycle trials through every skeleton")
    sub.add_parser("minimal-pairs", parents=[common], help="minimal (radical, socle) candidate pairs")
    schur = sub.add_parser("schur", parents=[common], help="Schur-root query for the Kronecker quiver")
    schur.add_argument("-r", type=int, required=True)
    schur.add_argument("-a", type=int, required=True)
    schur.add_argument("-b", type=int, required=True)
    deform = sub.add_parser("deform", parents=[common], help="build a deformation family")
    how = deform.add_mutually_exclusive_group(required=True)
    how.add_argument("--rho", type=int, help="push one simple from layer RHO down to RHO+1")
    how.add_argument("--tail", action="store_true", help="lengthen the radical series")
    deform.add_argument("--points", type=int, default=8, help="number of sampled t values")
    sub.add_parser("check", parents=[common], help="verify that a module satisfies the relations")
    sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    return parser


# -- input helpers -----------------------------------------------------------------------------------


def _read_json(text_or_path: str, what: str):
    try:
        if text_or_path.lstrip().startswith(("[", "{")):
            return json.loads(text_or_path)
        return json.loads(Path(text_or_path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {what} {text_or_path!r}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {what} {text_or_path!r}: {exc}") from exc


def _algebra(args) -> TruncatedAlgebra:
    if args.algebra and args.local:
        raise UsageError("give either --algebra or --local, not both")
    try:
        if args.local:
            return local_algebra(*args.local)
        if args.algebra:
            return TruncatedAlgebra.from_dict(_read_json(args.algebra, "algebra"))
    except ValueError as exc:
        raise UsageError(f"--algebra/--local: {exc}") from exc
    raise UsageError("an algebra is required: use --algebra PATH or --local R L")


def _dim(args, alg: TruncatedAlgebra) -> tuple[int, ...]:
    if args.dim is None:
        raise UsageError("-d/--dim is required")
    try:
        d = tuple(int(x) for x in args.dim.strip("[]() ").split(","))
    except ValueError:
        raise UsageError(f"-d/--dim: cannot parse {args.dim!r}") from None
    if len(d) != alg.n:
        raise UsageError(f"-d/--dim: expected {alg.n} entries, got {len(d)}")
    if any(x < 0 for x in d) or sum(d) == 0:
        raise UsageError("-d/--dim: need a nonzero, nonnegative dimension")
    return d


def _sequence(args, alg: TruncatedAlgebra) -> SemisimpleSequence:
    if not args.sequence:
        raise UsageError("--sequence is required")
    raw = _read_json(args.sequence, "sequence")
    try:
        layers = [[x] if isinstance(x, int) else x for x in raw]
        S = SemisimpleSequence(tuple(tuple(layer) for layer in layers))
        if len(S) != alg.L + 1 or S.n != alg.n:
            raise ValueError(f"need {alg.L + 1} layers of {alg.n} entries")
    except (TypeError, ValueError) as exc:
        raise UsageError(f"--sequence: {exc}") from exc
    return S


def _module(args) -> ModulePoint:
    if not args.module:
        raise UsageError("--module is required")
    try:
        return ModulePoint.from_dict(_read_json(args.module, "module"))
    except ValueError as exc:
        raise UsageError(f"--module: {exc}") from exc


def _header(verb: str, args) -> str:
    return f"# repvar {verb}  p={args.prime}  trials={args.trials}  seed={args.seed}"


def _emit(args, lines: list[str], payload) -> None:
    if args.json:
        print(json.dumps({"verb": args.verb, "p": args.prime, "trials": args.trials, "seed": args.seed, "result": payload}, sort_keys=True))
    else:
        print("\n".join([_header(args.verb, args)] + lines))


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    fmt = lambda row: " | ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip()
    return [fmt(header), "-+-".join("-" * w for w in widths)] + [fmt(r) for r in rows]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# -- verbs -------------------------------------------------------------------------------------------


def _components(args) -> int:
    alg = _algebra(args)
    header = ["S", "generic S*", "bounds", "minimal-pair", "Schur-hint l", "trials"]
    if alg.is_local:
        (d,) = _dim(args, alg)
        comps = local_components(alg.loop_count, alg.L, d, verify=args.verify, trials=args.trials, seed=args.seed, p=args.prime)
        ok = True
        for c in comps:
            if c.two_sided_bounds:
                ok &= realizable(alg, c.S) and satisfies_layer_bounds(alg.loop_count, c.S.layer_dims())
                ok &= c.generic_socle == c.S.reverse()
        rows = [
            [str(c.S), str(c.generic_socle), _yes(c.two_sided_bounds), _yes(c.minimal_pair), "-" if c.schur_hint is None else str(c.schur_hint), str(c.trials_used)]
            for c in comps
        ]
        notes = sorted({c.note for c in comps if c.note})
        lines = _table(header, rows) + [f"{len(comps)} component(s)"] + [f"note: {n}" for n in notes]
        _emit(args, lines, [c.to_dict() for c in comps])
        return 0 if ok else 1
    d = _dim(args, alg)
    pairs = minimal_pairs(radsoc_candidates(alg, d, args.trials, args.seed, args.prime))
    rows = [[str(pr.rad), str(pr.soc), "-", "yes", "-", str(args.trials)] for pr in pairs]
    lines = _table(header, rows) + [
        f"{len(pairs)} minimal pair(s); each radical layering closes to an irreducible component",
        "note: for non-local algebras further components may exist that minimal pairs do not detect",
    ]
    _emit(args, lines, [{"S": pr.rad.to_list(), "generic_socle": pr.soc.to_list()} for pr in pairs])
    return 0


def _sequences(args) -> int:
    alg = _algebra(args)
    seqs = enumerate_realizable(alg, _dim(args, alg))
    _emit(args, [str(S) for S in seqs] + [f"{len(seqs)} realizable sequence(s)"], [S.to_list() for S in seqs])
    return 0


def _skeleta(args) -> int:
    alg = _algebra(args)
    S = _sequence(args, alg)
    sks = enumerate_skeleta(alg, S)
    lines = []
    for k, sk in enumerate(sks, start=1):
        lines += [f"skeleton {k}:", sk.render(), "json: " + json.dumps(sk.to_dict(), sort_keys=True)]
    lines.append(f"{len(sks)} skeleton(s)")
    _emit(args, lines, [sk.to_dict() for sk in sks])
    return 0


def _sample(args) -> int:
    alg = _algebra(args)
    S = _sequence(args, alg)
    if not realizable(alg, S):
        raise UsageError(f"--sequence: {S} is not realizable")
    M = sample_module(alg, S, args.seed, args.prime)
    _emit(args, [json.dumps(M.to_dict(), sort_keys=True)], M.to_dict())
    return 0


def _layering(args) -> int:
    M = _module(args)
    if check_point(M):
        print("module violates the truncation relations", file=sys.stderr)
        return 1
    S, T = radsoc_pair(M)
    _emit(args, [f"radical layering: {S}", f"socle layering:   {T}"], {"radical": S.to_list(), "socle": T.to_list()})
    return 0


def _socle_generic(args) -> int:
    alg = _algebra(args)
    S = _sequence(args, alg)
    if not realizable(alg, S):
        raise UsageError(f"--sequence: {S} is not realizable")
    soc, used = generic_socle_layering(
        alg, S, args.trials, args.seed, args.prime, return_trials=True, all_skeleta=args.all_skeleta
    )
    lines = [f"S = {S}", f"generic S* = {soc}", f"equals reversed S: {_yes(soc == S.reverse())}", f"trials used: {used}"]
    _emit(args, lines, {"S": S.to_list(), "generic_socle": soc.to_list(), "trials_used": used})
    return 0


def _minimal_pairs(args) -> int:
    alg = _algebra(args)
    d = _dim(args, alg)
    cands = radsoc_candidates(alg, d, args.trials, args.seed, args.prime)
    pairs = minimal_pairs(cands)
    lines = _table(["S", "generic S*"], [[str(pr.rad), str(pr.soc)] for pr in pairs])
    lines.append(f"{len(pairs)} minimal of {len(cands)} candidate pair(s)")
    _emit(args, lines, [{"S": pr.rad.to_list(), "generic_socle": pr.soc.to_list()} for pr in pairs])
    return 0


def _schur(args) -> int:
    try:
        closed = schur_root(args.r, args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    oracle = schur_root_oracle(args.r, args.a, args.b, trials=args.trials, seed=args.seed, p=args.prime)
    verdict = "a Schur root" if closed else "not a Schur root"
    lines = [f"({args.a},{args.b}) for {args.r} arrows: {verdict}", f"endomorphism oracle agrees: {_yes(closed == oracle)}"]
    _emit(args, lines, {"r": args.r, "a": args.a, "b": args.b, "schur": closed, "oracle": oracle})
    return 0 if closed == oracle else 1


def _deform(args) -> int:
    if args.module:
        M = _module(args)
    else:
        alg = _algebra(args)
        S = _sequence(args, alg)
        if not realizable(alg, S):
            raise UsageError(f"--sequence: {S} is not realizable")
        M = sample_module(alg, S, args.seed, args.prime)
    try:
        fam = push_down_family(M, args.rho) if args.rho is not None else tail_extension_family(M)
    except ValueError as exc:
        print(f"cannot build the family: {exc}", file=sys.stderr)
        return 1
    base_pair = radsoc_pair(fam.evaluate(0))
    rng = np.random.default_rng(args.seed)
    rows = []
    ok = fam.evaluate(0) == fam.base
    for t in rng.integers(1, M.p, size=args.points):
        D = fam.evaluate(int(t))
        S_t, T_t = radsoc_pair(D)
        good = not check_point(D) and S_t == fam.target_S
        ok &= good
        rows.append([str(int(t)), str(S_t), str(T_t), _yes(good)])
    witness = ", ".join(f"{k}={v}" for k, v in fam.witness.items())
    lines = [f"base layering:   {base_pair[0]}", f"target layering: {fam.target_S}", f"witness: {witness}"]
    lines += _table(["t", "S(D_t)", "S*(D_t)", "target"], rows)
    payload = {
        "base": base_pair[0].to_list(),
        "target": fam.target_S.to_list(),
        "witness": dict(fam.witness),
        "samples": [{"t": int(r[0]), "ok": r[3] == "yes"} for r in rows],
    }
    _emit(args, lines, payload)
    return 0 if ok else 1


def _check(args) -> int:
    M = _module(args)
    bad = check_point(M)
    lines = ["ok"] if not bad else [f"violated: {w}" for w in bad]
    _emit(args, lines, {"ok": not bad, "violations": [list(w.arrows) for w in bad]})
    return 0 if not bad else 1


def _selftest(args) -> int:
    from .acceptance import run_all

    print(_header("selftest", args))
    results = run_all(echo=print)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return 0 if passed == len(results) else 1


HANDLERS = {
    "components": _components,
    "sequences": _sequences,
    "skeleta": _skeleta,
    "sample": _sample,
    "layering": _layering,
    "socle-generic": _socle_generic,
    "minimal-pairs": _minimal_pairs,
    "schur": _schur,
    "deform": _deform,
    "check": _check,
    "selftest": _selftest,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        la.check_prime(args.prime)
        return HANDLERS[args.verb](args)
    except (UsageError, ValueError) as exc:
        print(f"repvar: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
