"""Command-line surface: every operation behind a subcommand with JSON/CSV/pretty output.

Exit codes: 0 all checks passed, 1 a theorem-style check failed (non-member,
failed audit claim, dominance violation), 2 input parse/usage error,
3 class-parameter validation error.

The default class parameters can be supplied through the QRUSCH_SPEC
environment variable (a path to a parameter JSON file); everything else is
flags. Subcommands are pure functions of their inputs and seed: re-running
produces byte-identical output files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from .bounds import distortion_f, distortion_fprime, radius_close_to_convex, radius_convex, radius_starlike
from .classcheck import (
    decompose,
    extremal_fk,
    membership_iff_T,
    membership_sufficient,
    mu_profile,
)
from .exceptions import (
    InputFormatError,
    NotAMemberError,
    SpecValidationError,
    UnconvergedError,
)
from .janowski import QClassSpec
from .series import NegativeCoeffSeries, TruncatedSeries
from .verify import (
    AuditConfig,
    DiskGrid,
    VERDICT_PASS,
    default_spec_grid,
    integral_mean,
    necessity_witness_search,
    reports_to_csv,
    reports_to_jsonl,
    run_audit,
    subordination_grid_check,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_INVALID = 3

SPEC_ENV_VAR = "QRUSCH_SPEC"


def _fmt(x) -> str:
    return f"{float(x):.6g}"


def _write_output(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_json_file(path: str):
    try:
        with open(path) as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputFormatError(f"cannot read JSON from {path}: {exc}") from exc


def _load_spec(args) -> QClassSpec:
    path = getattr(args, "spec", None) or os.environ.get(SPEC_ENV_VAR)
    if not path:
        raise InputFormatError(
            f"no class parameters given: pass --spec FILE or set {SPEC_ENV_VAR}"
        )
    return QClassSpec.from_json_dict(_load_json_file(path))


def _load_series(path: str) -> TruncatedSeries:
    return TruncatedSeries.from_json_dict(_load_json_file(path))


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise InputFormatError(f"bad numeric list {text!r}") from exc


# --------------------------------------------------------------------------
# check
# --------------------------------------------------------------------------


def _cmd_check(args) -> int:
    spec = _load_spec(args)
    series = _load_series(args.series)
    suff = membership_sufficient(series, spec)
    profile = mu_profile(spec, series.degree) if series.degree >= 2 else np.zeros(0)
    bound_per_k = ((spec.A - spec.B) / profile).tolist() if profile.size else []

    grid = DiskGrid(radial_count=args.grid_radial, angular_count=args.grid_angular, r_max=args.rmax)
    grid_report = subordination_grid_check(series, spec, grid)

    exact = None
    witness = None
    try:
        negative = NegativeCoeffSeries.from_series(series)
    except InputFormatError:
        negative = None
    if negative is not None:
        exact = membership_iff_T(negative, spec)
        if not exact.member:
            witness = necessity_witness_search(negative, spec)

    report = {
        "member": bool(suff.member),
        "slack": float(suff.slack),
        "total": float(suff.total),
        "mu": profile.tolist(),
        "bound_per_k": bound_per_k,
        "exact_member": None if exact is None else bool(exact.member),
        "grid_check": grid_report.to_json_dict(),
        "witness": None if witness is None else [float(witness), 0.0],
    }

    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["member", "slack", "total", "exact_member", "grid_verdict",
             "grid_worst_margin", "witness_re"]
        )
        writer.writerow(
            [report["member"], report["slack"], report["total"], report["exact_member"],
             grid_report.verdict, grid_report.worst_margin,
             None if witness is None else witness]
        )
        text = buf.getvalue()
    else:
        lines = [
            f"coefficient test: {'member' if suff.member else 'not a member'} "
            f"(total {_fmt(suff.total)}, slack {_fmt(suff.slack)})"
        ]
        if exact is not None:
            lines.append(
                "exact negative-coefficient test: "
                + ("member" if exact.member else "not a member")
            )
        lines.append(
            f"grid check: {grid_report.verdict} "
            f"(worst margin {_fmt(grid_report.worst_margin)} at z = {grid_report.witness:.6g})"
        )
        if witness is not None:
            lines.append(f"violation witness on the real axis: z = {_fmt(witness)}")
        text = "\n".join(lines) + "\n"
    _write_output(text, args.output)
    return EXIT_OK if suff.member else EXIT_CHECK_FAILED


# --------------------------------------------------------------------------
# extremal
# --------------------------------------------------------------------------


def _cmd_extremal(args) -> int:
    spec = _load_spec(args)
    series = extremal_fk(args.k, spec)
    text = json.dumps(series.to_json_dict(), indent=2) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# bounds
# --------------------------------------------------------------------------


def _cmd_bounds(args) -> int:
    spec = _load_spec(args)
    radii = _parse_float_list(args.r_list)
    psis = _parse_float_list(args.psi_list)
    for r in radii:
        if not 0.0 <= r < 1.0:
            raise InputFormatError(f"radius must satisfy 0 <= r < 1, got {r}")
    for psi in psis:
        if not 0.0 <= psi < 1.0:
            raise InputFormatError(f"order psi must satisfy 0 <= psi < 1, got {psi}")

    distortion_rows = []
    for r in radii:
        env_f = distortion_f(r, spec)
        env_d = distortion_fprime(r, spec)
        distortion_rows.append(
            {"r": r, "lower_f": env_f.lower, "upper_f": env_f.upper,
             "lower_fprime": env_d.lower, "upper_fprime": env_d.upper}
        )
    radius_rows = []
    for psi in psis:
        for fn in (radius_starlike, radius_convex, radius_close_to_convex):
            res = fn(psi, spec, args.kmax)
            radius_rows.append(
                {"kind": res.kind, "psi": res.psi, "radius": res.radius,
                 "minimizing_k": res.minimizing_k, "unclamped_inf": res.unclamped_inf}
            )

    if args.format == "json":
        text = json.dumps({"distortion": distortion_rows, "radii": radius_rows}, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r", "lower_f", "upper_f", "lower_fprime", "upper_fprime"])
        for row in distortion_rows:
            writer.writerow([row["r"], row["lower_f"], row["upper_f"],
                             row["lower_fprime"], row["upper_fprime"]])
        writer.writerow([])
        writer.writerow(["kind", "psi", "radius", "minimizing_k", "unclamped_inf"])
        for row in radius_rows:
            writer.writerow([row["kind"], row["psi"], row["radius"],
                             row["minimizing_k"], row["unclamped_inf"]])
        text = buf.getvalue()
    else:
        lines = ["r      |f| in [lower, upper]   |f'| in [lower, upper]"]
        for row in distortion_rows:
            lines.append(
                f"{_fmt(row['r']):6} [{_fmt(row['lower_f'])}, {_fmt(row['upper_f'])}]"
                f"   [{_fmt(row['lower_fprime'])}, {_fmt(row['upper_fprime'])}]"
            )
        lines.append("")
        lines.append("kind              psi     radius   k*   unclamped")
        for row in radius_rows:
            lines.append(
                f"{row['kind']:<17} {_fmt(row['psi']):<7} {_fmt(row['radius']):<8} "
                f"{row['minimizing_k']:<4} {_fmt(row['unclamped_inf'])}"
            )
        text = "\n".join(lines) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# audit
# --------------------------------------------------------------------------


def _cmd_audit(args) -> int:
    if args.grid:
        entries = _load_json_file(args.grid)
        if not isinstance(entries, list):
            raise InputFormatError("grid file must hold a JSON array of parameter objects")
    else:
        entries = default_spec_grid()
    config = AuditConfig(
        seed=args.seed,
        grid=DiskGrid(radial_count=args.grid_radial, angular_count=args.grid_angular,
                      r_max=args.rmax),
        sufficiency_samples=args.samples,
        distortion_samples=args.samples,
        dominance_samples=args.dominance_samples,
        k_max=args.kmax,
        nodes=args.nodes,
    )
    reports = run_audit(entries, config)
    _write_output(reports_to_jsonl(reports), args.output)
    if args.csv:
        _write_output(reports_to_csv(reports), args.csv)
    return EXIT_OK if all(rep.verdict == VERDICT_PASS for rep in reports) else EXIT_CHECK_FAILED


# --------------------------------------------------------------------------
# integral-means
# --------------------------------------------------------------------------


def _cmd_integral_means(args) -> int:
    spec = _load_spec(args)
    series = _load_series(args.series)
    radii = _parse_float_list(args.r)
    exponents = _parse_float_list(args.s)

    negative = None
    try:
        candidate = NegativeCoeffSeries.from_series(series)
        if membership_iff_T(candidate, spec).member:
            negative = candidate
    except InputFormatError:
        pass
    benchmark = extremal_fk(2, spec).to_series() if negative is not None else None

    rows = []
    all_dominated = True
    for r in radii:
        for s in exponents:
            mean = integral_mean(series, r, s, args.nodes)
            row = {"r": r, "s": s, "mean": mean}
            if benchmark is not None:
                bench = integral_mean(benchmark, r, s, args.nodes)
                row["extremal_mean"] = bench
                row["dominated"] = mean <= bench + 1e-9
                all_dominated = all_dominated and row["dominated"]
            rows.append(row)

    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["r", "s", "mean"] + (
            ["extremal_mean", "dominated"] if benchmark is not None else []
        )
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[h] for h in header])
        text = buf.getvalue()
    else:
        lines = []
        for row in rows:
            line = f"r={_fmt(row['r'])} s={_fmt(row['s'])} mean={_fmt(row['mean'])}"
            if "extremal_mean" in row:
                line += (
                    f" extremal={_fmt(row['extremal_mean'])}"
                    f" dominated={'yes' if row['dominated'] else 'NO'}"
                )
            lines.append(line)
        text = "\n".join(lines) + "\n"
    _write_output(text, args.output)
    return EXIT_OK if all_dominated else EXIT_CHECK_FAILED


# --------------------------------------------------------------------------
# decompose
# --------------------------------------------------------------------------


def _cmd_decompose(args) -> int:
    spec = _load_spec(args)
    series = _load_series(args.series)
    negative = NegativeCoeffSeries.from_series(series)  # InputFormatError if not T-form
    weights = decompose(negative, spec)  # NotAMemberError if outside the class

    if args.format == "json":
        text = json.dumps({"weights": weights.tolist()}, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "weight"])
        for k, eta in enumerate(weights, start=1):
            writer.writerow([k, eta])
        text = buf.getvalue()
    else:
        lines = [f"eta_{k} = {_fmt(eta)}" for k, eta in enumerate(weights, start=1) if eta != 0]
        lines.append(f"sum = {_fmt(weights.sum())}")
        text = "\n".join(lines) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_common(sub, with_spec=True):
    if with_spec:
        sub.add_argument("--spec", help=f"parameter JSON file (default: ${SPEC_ENV_VAR})")
    sub.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty",
                     help="output format (default pretty, 6 significant digits)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrusch",
        description="Coefficient classes built from q-difference operators: "
                    "membership checks, sharp bounds, radii, and a numerical theorem audit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="membership tests for a series file")
    p.add_argument("series", help="series JSON file")
    _add_common(p)
    p.add_argument("--grid-radial", type=_positive_int, default=24)
    p.add_argument("--grid-angular", type=_positive_int, default=96)
    p.add_argument("--rmax", type=float, default=0.995)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("extremal", help="write the extreme-point series for an index k")
    p.add_argument("-k", type=_positive_int, required=True, help="coefficient index (1 gives z)")
    _add_common(p)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("bounds", help="distortion envelopes and radii tables")
    _add_common(p)
    p.add_argument("--r-list", default="0.1,0.25,0.5,0.75,0.9", help="comma-separated radii in [0,1)")
    p.add_argument("--psi-list", default="0,0.5", help="comma-separated orders in [0,1)")
    p.add_argument("--kmax", type=_positive_int, default=64)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("audit", help="run every claim over a parameter grid (JSON lines out)")
    p.add_argument("--grid", help="JSON file with an array of parameter objects "
                                  "(default: built-in 108-point grid)")
    p.add_argument("-o", "--output", help="JSON-lines output file (default stdout)")
    p.add_argument("--csv", help="also write a CSV summary to this path")
    p.add_argument("--seed", type=int, default=1729)
    p.add_argument("--grid-radial", type=_positive_int, default=24)
    p.add_argument("--grid-angular", type=_positive_int, default=96)
    p.add_argument("--rmax", type=float, default=0.995)
    p.add_argument("--kmax", type=_positive_int, default=64)
    p.add_argument("--nodes", type=_positive_int, default=512)
    p.add_argument("--samples", type=_positive_int, default=100,
                   help="random members per parameter point")
    p.add_argument("--dominance-samples", type=_positive_int, default=50)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("integral-means", help="circle means of |f|^s, with dominance check for members")
    p.add_argument("series", help="series JSON file")
    _add_common(p)
    p.add_argument("--r", default="0.3,0.6,0.9", help="comma-separated radii in (0,1)")
    p.add_argument("--s", default="0.5,1,2", help="comma-separated positive exponents")
    p.add_argument("--nodes", type=_positive_int, default=512)
    p.set_defaults(func=_cmd_integral_means)

    p = sub.add_parser("decompose", help="convex weights of a member over the extreme points")
    p.add_argument("series", help="series JSON file (negative-coefficient form)")
    _add_common(p)
    p.set_defaults(func=_cmd_decompose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except NotAMemberError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except UnconvergedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except SpecValidationError as exc:
        print(f"invalid class parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
