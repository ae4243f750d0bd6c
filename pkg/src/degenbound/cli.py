"""Command-line entry point.

Exit codes: 0 when every verdict holds, 1 when a bound fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import __version__
from .appendix import CHECKS, spot_values, verify_appendix
from .audit import audit, bound_verdicts
from .bounds import (
    CodeParams,
    DegeneracyProfile,
    degenerate_bound_max_k,
    ell_t_bound_max_k,
    lemma1_max_k,
    qhamming_max_k,
    singleton_max_k,
)
from .classify import OPTIMAL_K, cross_check, degenerate_allowed
from .figures import figure_data
from .stabilizer import CodeParseError, DistanceNotFound, TooLargeError, parse_code
from .thresholds import HORIZON_ENV, HorizonTooSmallError, reference_table, threshold_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _doc(kind: str, **body) -> dict:
    return {"kind": kind, "version": __version__, **body}


def _write(doc: dict, rows: tuple[list, list] | None, fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = json.dumps(doc, indent=2) + "\n"
    else:
        if rows is None:
            raise UsageError(f"--format {fmt} is not available for this subcommand")
        header, body = rows
        buf = io.StringIO()
        writer = csv.writer(buf, delimiter="," if fmt == "csv" else "\t",
                            lineterminator="\n")
        writer.writerow(header)
        writer.writerows(["" if v is None else v for v in r] for r in body)
        text = buf.getvalue()
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _verdict_rows(verdicts):
    header = ["bound_id", "k", "max_k", "holds", "saturated"]
    return header, [[v.bound_id.value, v.k, v.max_k, v.holds, v.saturated] for v in verdicts]


def cmd_bound(args) -> int:
    try:
        params = CodeParams(args.n, args.k, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    profile = None
    if args.ell is not None:
        sigma = args.sigma if args.sigma is not None else 2 * params.t * args.ell
        profile = DegeneracyProfile(args.ell, sigma)
        try:
            profile.validate(params.t)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.sigma is not None:
        raise UsageError("--sigma requires --ell")
    verdicts = bound_verdicts(params, profile, assume_degenerate=args.assume_degenerate)
    ok = all(v.holds for v in verdicts)
    doc = _doc("bound", n=params.n, k=params.k, d=params.d, t=params.t, all_hold=ok,
               verdicts=[v.to_dict() for v in verdicts])
    _write(doc, _verdict_rows(verdicts), args.format, args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_maxk(args) -> int:
    if args.n < 1 or args.d < 1:
        raise UsageError("need n >= 1 and d >= 1")
    t = (args.d - 1) // 2
    values = {
        "quantum_hamming": qhamming_max_k(args.n, t),
        "quantum_singleton": singleton_max_k(args.n, args.d),
    }
    if t >= 1 and args.n >= 2 * t + 1:
        values["degenerate_bound"] = degenerate_bound_max_k(args.n, t)
    if args.ell is not None:
        values["ell_t_bound"] = ell_t_bound_max_k(args.n, t, args.ell)
        if args.sigma is not None:
            prof = DegeneracyProfile(args.ell, args.sigma)
            try:
                values["lemma1_ell_sigma"] = lemma1_max_k(args.n, t, prof)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    doc = _doc("maxk", n=args.n, d=args.d, t=t, max_k=values)
    _write(doc, (["bound_id", "max_k"], [[k, v] for k, v in values.items()]),
           args.format, args.output)
    return EXIT_OK


def cmd_thresholds(args) -> int:
    if args.table1:
        rows = []
        for t, ref in reference_table().items():
            rep = threshold_report(t, args.horizon)
            rows.append({
                "t": t, "rains_bound": ref.rains_bound, "M_t": ref.M_t,
                "N_t_reference": ref.N_t, "N_t_computed": rep.N(1),
                "a0": rep.a0, "matches": rep.N(1) == ref.N_t,
            })
        ok = all(r["matches"] for r in rows)
        doc = _doc("table1", rows=rows, all_match=ok)
        header = list(rows[0])
        _write(doc, (header, [[r[h] for h in header] for r in rows]), args.format, args.output)
        return EXIT_OK if ok else EXIT_FAIL
    if args.t is None or args.t < 1:
        raise UsageError("thresholds needs -t >= 1 (or --table1)")
    try:
        rep = threshold_report(args.t, args.horizon)
    except HorizonTooSmallError as exc:
        raise UsageError(str(exc)) from None
    doc = _doc("thresholds", **rep.to_dict(), N_ell=rep.N(args.ell), ell=args.ell)
    rows = (["a", "n_a"], [[p.a, p.n_a] for p in rep.crossing_points])
    _write(doc, rows, args.format, args.output)
    return EXIT_OK


def cmd_audit(args) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    try:
        code = parse_code(text)
    except CodeParseError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    try:
        report = audit(code)
    except (TooLargeError, DistanceNotFound) as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    doc = _doc("audit", file=os.path.basename(args.file), **report.to_dict())
    _write(doc, _verdict_rows(report.verdicts), args.format, args.output)
    return EXIT_OK if report.all_hold else EXIT_FAIL


def cmd_classify(args) -> int:
    points = []
    for n in range(args.n_min, args.n_max + 1):
        if n not in OPTIMAL_K:
            raise UsageError(f"no embedded optimal k for n={n} (table covers 5..25)")
        allowed = degenerate_allowed(n)
        points.append({"n": n, "optimal_k": OPTIMAL_K[n],
                       "degenerate_bound_max_k": degenerate_bound_max_k(n, 1),
                       "label": "red" if allowed else "black"})
    doc = _doc("classify", points=points)
    header = list(points[0]) if points else ["n", "optimal_k", "degenerate_bound_max_k", "label"]
    _write(doc, (header, [[p[h] for h in header] for p in points]), args.format, args.output)
    return EXIT_OK


def cmd_cross_check(args) -> int:
    if args.m_max < 0:
        raise UsageError("--m-max must be nonnegative")
    rep = cross_check(args.m_max, args.n_min, args.n_max)
    doc = _doc("cross_check", **rep.to_dict())
    header = ["n", "optimal_k", "degenerate_bound_max_k", "qhamming_max_k",
              "allowed_by_bound", "in_families"]
    _write(doc, (header, [[d[h] for h in header] for d in rep.discrepancies]),
           args.format, args.output)
    return EXIT_OK


def cmd_figure(args) -> int:
    data = figure_data(args.which)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        _write_table(out / f"figure{args.which}_curves.tsv", data["columns"], data["rows"],
                     data["note"])
        if "points" in data:
            pts = data["points"]
            _write_table(out / f"figure{args.which}_points.tsv", list(pts[0]),
                         [list(p.values()) for p in pts], None)
    doc = _doc("figure", **data)
    _write(doc, (data["columns"], data["rows"]), args.format, args.output)
    return EXIT_OK


def _write_table(path: Path, header, rows, note) -> None:
    buf = io.StringIO()
    if note:
        buf.write(f"# {note}\n")
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(header)
    w.writerows(["" if v is None else v for v in r] for r in rows)
    path.write_text(buf.getvalue())


def cmd_verify_appendix(args) -> int:
    if args.t_max < 1 or args.x_max < 0:
        raise UsageError("need --t-max >= 1 and --x-max >= 0")
    report = verify_appendix(range(1, args.t_max + 1), args.x_max, args.check or None)
    doc = _doc("verify_appendix", t_max=args.t_max, x_max=args.x_max,
               spot_values=spot_values(), **report.to_dict())
    header = ["check", "t", "passed", "evaluated"]
    rows = [[r.check, r.t, r.passed, r.evaluated] for r in report.results]
    _write(doc, (header, rows), args.format, args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenbound",
        description="Exact Hamming-like bounds for degenerate stabilizer codes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "tsv"), default="json",
                        help="output format (default: json)")
    common.add_argument("-o", "--output", help="write the document here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="check [[n,k,d]] against every bound")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--ell", type=int, help="number of independent stabilizer generators of weight <= 2t")
    p.add_argument("--sigma", type=int, help="total weight of those generators (default 2t*ell)")
    p.add_argument("--assume-degenerate", action="store_true",
                   help="also apply the bounds that hold only for degenerate codes")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("maxk", parents=[common], help="largest admissible k under each bound")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--sigma", type=int)
    p.set_defaults(func=cmd_maxk)

    p = sub.add_parser("thresholds", parents=[common], help="a0, n_a and N(l,t)")
    p.add_argument("-t", type=int)
    p.add_argument("--ell", type=int, default=1, help="report N(ell,t) (default 1)")
    p.add_argument("--horizon", type=_positive_int,
                   help=f"largest n scanned (default max(500, 8*t*a0), or ${HORIZON_ENV})")
    p.add_argument("--table1", action="store_true",
                   help="compare computed N(t) for t=1..7 with the published table")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("audit", parents=[common], help="analyze a .stab code file")
    p.add_argument("file")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("classify", parents=[common],
                       help="red/black labels of optimal distance-3 lengths")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=25)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cross-check", parents=[common],
                       help="direct classification vs closed-form length families")
    p.add_argument("--m-max", type=int, default=2)
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=25)
    p.set_defaults(func=cmd_cross_check)

    p = sub.add_parser("figure", parents=[common], help="plot data for figures 1-3")
    p.add_argument("which", type=int, choices=(1, 2, 3))
    p.add_argument("--out-dir", help="also write TSV plot files into this directory")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify-appendix", parents=[common],
                       help="bulk checks of the h_t lemmas")
    p.add_argument("--t-max", type=int, default=7)
    p.add_argument("--x-max", type=int, default=200)
    p.add_argument("--check", action="append", choices=CHECKS,
                   help="restrict to these checks (repeatable)")
    p.set_defaults(func=cmd_verify_appendix)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"degenbound {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
