"""Command-line interface: ``maxclass <command> [flags]``.

Exit status: 0 ok, 1 verification failure, 2 input error, 3 internal
consistency error. Errors are printed to stderr as JSON
``{"code", "message", "witness"?}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import fixtures
from .arrangement import arrangement_to_json, cells, run_sweep
from .arrangement.svg import write_sweep_svgs
from .compression import (
    check_non_clashing,
    check_round_trip,
    compress,
    is_acyclic,
    is_bijection_onto_small_sets,
    reconstruct,
    representation_from_peeling,
)
from .concepts import format_concept, is_maximal, is_maximum, sauer_bound, vc_dimension
from .errors import InternalConsistencyError, MaxClassError
from .formats import (
    class_text,
    dumps,
    read_arrangement,
    read_class,
    read_rep,
    write_arrangement,
)
from .graph import connected_components, max_cube_dim
from .lifting import construct
from .peeling import PeelingSequence, corner_peel, min_peel, verify_corner_sequence
from .topology import DEFAULT_BUDGET, boundary, is_collapsible, is_strongly_contractible

MAX_SWEEP_PLANES = 10


class VerificationFailed(MaxClassError):
    code = 1


def _emit(data, out: str | None) -> None:
    text = dumps(data)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_direction(text: str | None):
    if text is None:
        return None
    return tuple(Fraction(c) for c in text.split(","))


def _parse_sample(text: str) -> dict[int, int]:
    """``"1:0,3:1"`` -> {1: 0, 3: 1}."""
    sample = {}
    for item in filter(None, text.split(",")):
        i, b = item.split(":")
        sample[int(i)] = int(b)
    return sample


# -- commands -----------------------------------------------------------------


def cmd_construct(args) -> int:
    if args.count_only:
        if args.n <= 6:
            from .fastlift import scan_construct

            res = scan_construct(args.n, args.d)
            _emit(
                {"n": args.n, "d": args.d, "count": res.count, "sauer": sauer_bound(args.n, args.d), "all_ok": res.ok},
                args.out,
            )
            return 0 if res.ok else 3
        classes = construct(args.n, args.d, force=args.force)
        _emit({"n": args.n, "d": args.d, "count": len(classes), "sauer": sauer_bound(args.n, args.d)}, args.out)
        return 0
    classes = construct(args.n, args.d, force=args.force)
    _emit(
        {
            "n": args.n,
            "d": args.d,
            "count": len(classes),
            "classes": [C.strings() for C in classes],
        },
        args.out,
    )
    return 0


def analyze_class(path: str, budget: int = DEFAULT_BUDGET) -> dict:
    C = read_class(path)
    report = {"file": str(path), "n": C.n, "size": len(C)}
    if not C.concepts:
        return report
    vc = vc_dimension(C)
    report.update(
        vc=vc,
        sauer_bound=sauer_bound(C.n, vc),
        maximum=is_maximum(C),
        maximal=is_maximal(C),
        components=len(connected_components(C.concepts, C.n)),
        max_cube_dim=max_cube_dim(C),
    )
    if report["max_cube_dim"] >= 1:
        b = boundary(C)
        report["boundary"] = {
            "dim": b.dim - 1,
            "cubes": len(b.boundary_cubes),
            "per_colorset": {",".join(map(str, k)) or "-": c for k, c in b.per_colorset_counts.items()},
        }
    report["collapsible"] = str(is_collapsible(C, budget))
    report["strongly_contractible"] = str(is_strongly_contractible(C, budget))
    return report


def cmd_analyze(args) -> int:
    paths = args.cls
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(analyze_class, paths, [args.budget] * len(paths)))
    else:
        reports = [analyze_class(p, args.budget) for p in paths]
    _emit(reports[0] if len(reports) == 1 else reports, args.out)
    return 0


def cmd_peel(args) -> int:
    C = read_class(args.cls[0])
    if args.mode == "min":
        seq = min_peel(C)
    else:
        seq = corner_peel(C)
        if seq is None:
            raise VerificationFailed("class admits no corner-peeling sequence")
    data = seq.to_json()
    data["representation"] = representation_from_peeling(seq, C).to_json()
    _emit(data, args.out)
    return 0


def cmd_compress(args) -> int:
    C = read_class(args.cls[0])
    r = read_rep(args.rep, C.n)
    sample = _parse_sample(args.sample)
    S = compress(sample, C, r)
    v = reconstruct(S, r)
    _emit({"sample": {str(i): b for i, b in sorted(sample.items())}, "rep": sorted(S), "concept": format_concept(v, C.n)}, args.out)
    return 0


def cmd_verify_scheme(args) -> int:
    C = read_class(args.cls[0])
    raw = json.loads(Path(args.rep).read_text())
    r = read_rep(args.rep, C.n)
    missing = [format_concept(v, C.n) for v in C if v not in r.entries]
    report: dict = {"n": C.n, "size": len(C), "d": r.d, "total": not missing}
    if missing:
        report["missing"] = missing
        _emit(report, args.out)
        return 1
    nc = check_non_clashing(C, r)
    report["non_clashing"] = nc.ok
    if not nc:
        report["clash"] = [format_concept(v, C.n) for v in nc.witness]
    acyc = is_acyclic(C, r)
    report["acyclic"] = acyc.acyclic
    report["anomalies"] = len(acyc.anomalies)
    report["bijection_onto_small_sets"] = is_bijection_onto_small_sets(C, r, r.d)
    rt = check_round_trip(C, r) if nc else None
    report["round_trip"] = bool(rt)
    ok = nc.ok and acyc.acyclic and bool(rt)
    if isinstance(raw, dict) and "events" in raw:
        seq = PeelingSequence.from_json(raw)
        if seq.mode != "min":
            vc = verify_corner_sequence(C, seq.vertices)
            report["corner_sequence"] = vc.ok
            ok = ok and vc.ok
    report["ok"] = ok
    _emit(report, args.out)
    return 0 if ok else 1


def cmd_sweep(args) -> int:
    A = read_arrangement(args.arrangement)
    if A.n > MAX_SWEEP_PLANES and not args.force:
        raise ValueError(f"sweep is limited to {MAX_SWEEP_PLANES} planes; pass --force to override")
    C, cellmap = cells(A)
    seq, g = run_sweep(A, _parse_direction(args.direction), args.seed)
    r = representation_from_peeling(seq, C)
    if not check_non_clashing(C, r) or not is_acyclic(C, r):
        raise InternalConsistencyError("sweep representation is not a valid scheme")
    data = {
        "arrangement": arrangement_to_json(A),
        "direction": [f"{c.numerator}/{c.denominator}" for c in g],
        "class": C.strings(),
        **seq.to_json(),
        "representation": r.to_json(),
    }
    _emit(data, args.out)
    if args.svg:
        write_sweep_svgs(A, cellmap, seq, args.svg)
    return 0


def cmd_fixtures(args) -> int:
    if args.action == "list":
        rows = [{"name": f.name, "size": len(f.rows), "description": f.description} for f in fixtures.FIXTURES.values()]
        rows += [{"name": k, "kind": A.kind, "planes": A.n} for k, (A, _) in fixtures.ARRANGEMENTS.items()]
        _emit(rows, None)
        return 0
    if args.name:
        if args.name in fixtures.ARRANGEMENTS:
            A, _ = fixtures.ARRANGEMENTS[args.name]
            _emit(arrangement_to_json(A), args.out)
            return 0
        f = fixtures.get(args.name)
        text = class_text(f.cls, f.rows)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0
    if not args.out:
        raise ValueError("fixtures export without --name needs --out DIR")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for f in fixtures.FIXTURES.values():
        (outdir / f"{f.name}.txt").write_text(class_text(f.cls, f.rows))
        rep = f.representation()
        if rep is not None:
            (outdir / f"{f.name}.rep.json").write_text(dumps(rep.to_json()))
    for name, (A, _) in fixtures.ARRANGEMENTS.items():
        write_arrangement(A, outdir / f"{name}.json")
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="maxclass", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--out", help="output file (default: stdout)")
        return p

    p = add("construct", cmd_construct, "all d-maximum classes of the n-cube")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--count-only", action="store_true", help="report counts and checks only")

    p = add("analyze", cmd_analyze, "VC dimension, maximality and topology of a class")
    p.add_argument("--class", dest="cls", action="append", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)

    p = add("peel", cmd_peel, "peeling sequence and the derived representation map")
    p.add_argument("--class", dest="cls", action="append", required=True)
    p.add_argument("--mode", choices=("corner", "min"), default="corner")

    p = add("compress", cmd_compress, "compress a labeled sample and reconstruct it")
    p.add_argument("--class", dest="cls", action="append", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--sample", required=True, help='e.g. "1:0,3:1"')

    p = add("verify-scheme", cmd_verify_scheme, "check a representation map exhaustively")
    p.add_argument("--class", dest="cls", action="append", required=True)
    p.add_argument("--rep", required=True)

    p = add("sweep", cmd_sweep, "cells and sweep peeling of a hyperplane arrangement")
    p.add_argument("--arrangement", required=True)
    p.add_argument("--svg", help="directory for SVG snapshots")
    p.add_argument("--direction", help='comma-separated rationals, e.g. "1,-1/3"')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true")

    p = add("fixtures", cmd_fixtures, "bundled example classes and arrangements")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("--name")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MaxClassError as exc:
        return _fail(exc.code, str(exc), exc.witness)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        return _fail(2, str(message))


def _fail(code: int, message: str, witness=None) -> int:
    err = {"code": code, "message": message}
    if witness is not None:
        err["witness"] = witness
    sys.stderr.write(json.dumps(err, default=str) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
