"""Command-line front end: verify, scan, search, phi, chi.

Exit codes: 0 = all hold / no violation, 1 = violation found, 2 = usage
or input error.  CSV cells use shortest round-trip decimal formatting so
reruns with identical flags and seed are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from typing import List, Optional, Sequence

from . import catalog, search, variational
from .catalog import InequalityId, TolerancePolicy
from .core import NonnegVector, Weights, validate_vector
from .errors import ClarksonError
from .search import Constraint, Distribution, SampleSpec

SEED_ENV_VAR = "CLARKSON_SEED"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        return repr(x)
    return str(x)


def _parse_floats(text: str) -> List[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"cannot parse number list {text!r}: {exc}")


def _parse_grid(text: str) -> List[float]:
    """start:stop:step, inclusive of stop within half a step."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(tok) for tok in parts)
    except ValueError as exc:
        raise UsageError(f"cannot parse grid {text!r}: {exc}")
    if step <= 0:
        raise UsageError(f"grid step must be positive, got {step}")
    out = []
    k = 0
    while True:
        val = start + k * step
        if val > stop + step / 2:
            break
        out.append(val)
        k += 1
    if not out:
        raise UsageError(f"grid {text!r} is empty")
    return out


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")


def _load_pairs(path: str, require_nonneg: bool):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read input file {path}: {exc}")
    pairs = doc.get("pairs") if isinstance(doc, dict) else None
    if not isinstance(pairs, list) or not pairs:
        raise UsageError("no input pairs")
    out = []
    for i, item in enumerate(pairs):
        try:
            x = validate_vector(item["x"], require_nonneg)
            y = validate_vector(item["y"], require_nonneg)
            w = Weights(tuple(item["w"])) if "w" in item and item["w"] is not None else None
        except (KeyError, TypeError, ClarksonError) as exc:
            raise UsageError(f"bad pair at index {i}: {exc}")
        out.append((x, y, w))
    return out


def _policy(args) -> TolerancePolicy:
    return TolerancePolicy(rel_tol=args.rel_tol, borderline_band=args.band)


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _inline_pair(args, require_nonneg: bool):
    if args.x is None or args.y is None:
        return None
    x = validate_vector(_parse_floats(args.x), require_nonneg)
    y = validate_vector(_parse_floats(args.y), require_nonneg)
    return [(x, y, None)]


def cmd_verify(args) -> int:
    ineq = InequalityId.from_cli(args.ineq)
    nonneg = ineq not in (
        InequalityId.C11,
        InequalityId.C12,
        InequalityId.C13_LEFT,
        InequalityId.C13_RIGHT,
    )
    pairs = _inline_pair(args, nonneg)
    if pairs is None:
        if args.input is None:
            raise UsageError("verify needs --input or both --x and --y")
        pairs = _load_pairs(args.input, nonneg)
    ps = _parse_floats(args.p) if args.p else [2.0]
    qs = _parse_floats(args.q) if args.q else [None]
    policy = _policy(args)
    out, close = _open_out(args.out)
    violated = False
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["ineq_id", "pair", "p", "q", "lhs", "rhs", "gap", "scale", "verdict"])
        for idx, (x, y, w) in enumerate(pairs):
            for p in ps:
                for q in qs:
                    try:
                        rep = catalog.evaluate(ineq, x, y, p, q, w, policy)
                    except ClarksonError as exc:
                        raise UsageError(f"pair {idx}: {exc}")
                    if rep.verdict is catalog.Verdict.VIOLATED:
                        violated = True
                    writer.writerow(
                        [rep.id.value, idx, _fmt(rep.p), _fmt(rep.q), _fmt(rep.lhs),
                         _fmt(rep.rhs), _fmt(rep.gap), _fmt(rep.scale), rep.verdict.value]
                    )
    finally:
        if close:
            out.close()
    return EXIT_VIOLATION if violated else EXIT_OK


def _spec_from_args(args) -> SampleSpec:
    dist = {d.value: d for d in Distribution}.get(args.dist)
    if dist is None:
        raise UsageError(f"unknown distribution {args.dist!r}")
    constraint = {c.value: c for c in Constraint}.get(args.constraint)
    if constraint is None:
        raise UsageError(f"unknown constraint {args.constraint!r}")
    try:
        return SampleSpec(
            dim_range=(args.nmin, args.nmax),
            distribution=dist,
            constraint=constraint,
            density=args.density,
            weights=args.weighted,
        )
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_scan(args) -> int:
    ineq = InequalityId.from_cli(args.ineq)
    p_grid = _parse_grid(args.p_grid)
    q_grid = _parse_grid(args.q_grid)
    spec = _spec_from_args(args)
    policy = _policy(args)
    cells = search.scan_grid(
        ineq, p_grid, q_grid, spec, args.samples, args.seed, policy,
        explore=args.explore, workers=args.workers,
    )
    out, close = _open_out(args.out)
    violated = False
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["ineq_id", "p", "q", "n_samples", "min_normalized_gap", "violations", "seed"]
        )
        for cell in cells:
            if cell.skipped:
                writer.writerow(
                    [ineq.value, _fmt(cell.p), _fmt(cell.q), 0, "skipped", 0, args.seed]
                )
                continue
            if cell.violations:
                violated = True
            writer.writerow(
                [ineq.value, _fmt(cell.p), _fmt(cell.q), cell.n_samples,
                 _fmt(cell.min_normalized_gap), cell.violations, args.seed]
            )
    finally:
        if close:
            out.close()
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_search(args) -> int:
    ineq = InequalityId.from_cli(args.ineq)
    spec = _spec_from_args(args)
    policy = _policy(args)
    q = args.q_value if args.q_value is not None else None
    try:
        exps = search._exps_for(ineq, args.p_value, q if q is not None else args.p_value)
    except ClarksonError as exc:
        raise UsageError(str(exc))
    try:
        if args.mode == "extremal":
            outcome = search.extremal_search(
                ineq, exps, spec, args.budget, args.seed, policy, explore=args.explore
            )
        else:
            outcome = search.counterexample_search(
                ineq, exps, spec, args.budget, args.seed, policy,
                explore=args.explore, workers=args.workers,
            )
    except ClarksonError as exc:
        raise UsageError(str(exc))
    print(f"status: {outcome.status.value}")
    print(f"evaluations: {outcome.evaluations}")
    print(f"seed: {outcome.seed}")
    if outcome.evaluations > 0 and outcome.best_report is not None:
        print(f"best_normalized_gap: {_fmt(outcome.normalized_gap)}")
        print(f"best_verdict: {outcome.best_report.verdict.value}")
    if outcome.exploratory:
        print("exploratory: true (constraint outside the stated regime)")
    if args.out and outcome.witness[0] is not None:
        x, y, p, qv, w = outcome.witness
        doc = {
            "pairs": [
                {
                    "x": list(x.entries),
                    "y": list(y.entries),
                    "w": list(w.masses) if w is not None else None,
                }
            ],
            "p": p,
            "q": qv,
            "seed": outcome.seed,
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if outcome.status is search.SearchStatus.VIOLATION_FOUND:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_phi(args) -> int:
    if args.u is None or args.v is None:
        raise UsageError("phi needs --u and --v")
    try:
        u = NonnegVector(tuple(_parse_floats(args.u)))
        v = NonnegVector(tuple(_parse_floats(args.v)))
        ctx = variational.PhiContext(u, v, args.p_value, args.q_value)
    except ClarksonError as exc:
        raise UsageError(str(exc))
    if args.grid_size < 2:
        raise UsageError("grid too coarse, minimum 2")
    bps = variational.breakpoints(ctx)
    out, close = _open_out(args.out)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["t", "phi", "phi_prime", "is_breakpoint_adjacent"])
        radius = 1e-6
        for k in range(args.grid_size):
            t = k / (args.grid_size - 1)
            val = variational.phi(ctx, t)
            adjacent = any(abs(t - bp) <= radius for bp in bps)
            deriv = ""
            if 0.0 < t < 1.0 and not adjacent:
                deriv = _fmt(variational.phi_prime(ctx, t))
            writer.writerow([_fmt(t), _fmt(val), deriv, str(adjacent).lower()])
        report = variational.monotonicity_scan(ctx, args.grid_size)
        writer.writerow(
            ["summary", _fmt(report.min_increment),
             f"is_nondecreasing={str(report.is_nondecreasing).lower()}", ""]
        )
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_chi(args) -> int:
    if args.grid_size < 3:
        raise UsageError("grid too coarse, minimum 3")
    try:
        ctx = variational.ChiContext(args.p_value, args.q_value, args.c)
    except ClarksonError as exc:
        raise UsageError(str(exc))
    out, close = _open_out(args.out)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["s", "chi"])
        for k in range(args.grid_size):
            s = ctx.c * k / (args.grid_size - 1)
            writer.writerow([_fmt(s), _fmt(variational.chi(ctx, s))])
        report = variational.chi_sign_scan(ctx, args.grid_size)
        intervals = ";".join(f"({_fmt(a)},{_fmt(b)})" for a, b in report.sign_change_intervals)
        writer.writerow(
            ["summary",
             f"has_positive={str(report.has_positive).lower()}"
             f" has_negative={str(report.has_negative).lower()}"
             f" sign_changes={intervals or 'none'}"]
        )
    finally:
        if close:
            out.close()
    return EXIT_OK


def _add_tolerance_flags(sub):
    sub.add_argument("--rel-tol", type=float, default=1e-9)
    sub.add_argument("--band", type=float, default=1e-7)


def _add_spec_flags(sub):
    sub.add_argument("--nmin", type=int, default=1)
    sub.add_argument("--nmax", type=int, default=16)
    sub.add_argument("--dist", default="uniform",
                     help="uniform | exponential | sparse")
    sub.add_argument("--density", type=float, default=0.5,
                     help="nonzero density for the sparse distribution")
    sub.add_argument("--constraint", default="nonnegative",
                     help="nonnegative | signed | dominated")
    sub.add_argument("--weighted", action="store_true")
    sub.add_argument("--explore", action="store_true",
                     help="allow constraint combinations outside the stated regime")
    sub.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clarkson",
        description="Verify and explore Clarkson-type norm inequalities.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    pv = subs.add_parser("verify", help="evaluate inequalities on explicit pairs")
    pv.add_argument("--ineq", required=True)
    pv.add_argument("--input", help="JSON file {\"pairs\":[{\"x\":[...],\"y\":[...]}]}")
    pv.add_argument("--x", help="inline vector, comma separated")
    pv.add_argument("--y", help="inline vector, comma separated")
    pv.add_argument("--p", help="comma-separated p values")
    pv.add_argument("--q", help="comma-separated q values")
    pv.add_argument("--out")
    _add_tolerance_flags(pv)
    pv.set_defaults(func=cmd_verify)

    ps = subs.add_parser("scan", help="seeded random scan over a (p, q) grid")
    ps.add_argument("--ineq", required=True)
    ps.add_argument("--p-grid", required=True, help="start:stop:step")
    ps.add_argument("--q-grid", required=True, help="start:stop:step")
    ps.add_argument("--samples", type=int, default=1000)
    ps.add_argument("--seed", type=int, default=None)
    ps.add_argument("--out")
    _add_tolerance_flags(ps)
    _add_spec_flags(ps)
    ps.set_defaults(func=cmd_scan)

    pr = subs.add_parser("search", help="counterexample or extremal search")
    pr.add_argument("--ineq", required=True)
    pr.add_argument("--p", dest="p_value", type=float, default=2.0)
    pr.add_argument("--q", dest="q_value", type=float, default=None)
    pr.add_argument("--mode", choices=["counterexample", "extremal"],
                    default="counterexample")
    pr.add_argument("--budget", type=int, default=10000)
    pr.add_argument("--seed", type=int, default=None)
    pr.add_argument("--out", help="witness JSON path")
    _add_tolerance_flags(pr)
    _add_spec_flags(pr)
    pr.set_defaults(func=cmd_search)

    pp = subs.add_parser("phi", help="tabulate phi and its derivative")
    pp.add_argument("--u", required=True)
    pp.add_argument("--v", required=True)
    pp.add_argument("--p", dest="p_value", type=float, required=True)
    pp.add_argument("--q", dest="q_value", type=float, required=True)
    pp.add_argument("--grid-size", type=int, default=257)
    pp.add_argument("--out")
    pp.set_defaults(func=cmd_phi)

    pc = subs.add_parser("chi", help="tabulate chi and scan for sign changes")
    pc.add_argument("--p", dest="p_value", type=float, required=True)
    pc.add_argument("--q", dest="q_value", type=float, required=True)
    pc.add_argument("--c", type=float, required=True)
    pc.add_argument("--grid-size", type=int, default=1001)
    pc.add_argument("--out")
    pc.set_defaults(func=cmd_chi)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except (UsageError, ClarksonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
