"""Command-line front end: compute, sweep, verify, predict.

Exit codes: 0 when every requested check passes, 2 on a verification
failure, 1 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from . import curves
from .box import BigradingError, build_complex, build_pair
from .f2 import square_is_zero
from .family import DEFAULT_WINDOW, compute_record, sweep, to_tsv, verified_fit
from .invariants import InvalidPatternError, alexander_polynomial, hfk_table, tau, thickness
from .type_a import (
    FIXTURES,
    PatternError,
    TypeAStructure,
    fixture_path,
    load_pattern,
    verify_a_infinity,
    verify_op_gradings,
)
from .type_d import build_cfd_one_over_m, verify_type_d

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
HELD_OUT = 5


class InputError(Exception):
    pass


def resolve_pattern(path: str) -> Path:
    """A file path, or a bundled fixture named by its stem (e.g. fixtures/mazur.json)."""
    p = Path(path)
    if p.exists():
        return p
    if p.stem in FIXTURES:
        return fixture_path(p.stem)
    raise InputError(f"pattern file not found: {path}")


def _load(path: str) -> TypeAStructure:
    try:
        return load_pattern(resolve_pattern(path))
    except PatternError as exc:
        raise InputError(f"{path}: {exc}") from None


def _positive(name: str) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1")
        return v

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistfloer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, default_format: str) -> None:
        p.add_argument("--pattern", required=True, help="pattern JSON (or curve JSON for predict)")
        p.add_argument("--format", choices=("tsv", "json", "text"), default=default_format)
        p.add_argument("--out", help="write the report here instead of stdout")

    c = sub.add_parser("compute", help="HFK table and invariants for one twist count")
    common(c, "text")
    c.add_argument("--m", type=_positive("--m"), required=True)

    s = sub.add_parser("sweep", help="invariants over a range of twist counts, with tail fits")
    common(s, "tsv")
    s.add_argument("--from", dest="m_from", type=_positive("--from"), default=1)
    s.add_argument("--to", dest="m_to", type=_positive("--to"), required=True)
    s.add_argument("--k", type=_positive("--k"), default=2)
    s.add_argument("--tail-window", type=_positive("--tail-window"), default=DEFAULT_WINDOW)
    s.add_argument("--jobs", type=_positive("--jobs"), default=1)

    v = sub.add_parser("verify", help="structure checks: A-infinity, gradings, type D, d^2 = 0")
    common(v, "text")
    v.add_argument("--m", type=_positive("--m"), default=3)

    p = sub.add_parser("predict", help="curve-oracle dimensions and (D, d) fit")
    common(p, "text")
    p.add_argument("--from", dest="m_from", type=_positive("--from"), default=20)
    p.add_argument("--to", dest="m_to", type=_positive("--to"), default=30)
    p.add_argument("--tail-window", type=_positive("--tail-window"), default=DEFAULT_WINDOW)
    p.add_argument("--jobs", type=_positive("--jobs"), default=1)
    return parser


# ---------------------------------------------------------------- commands


def cmd_compute(args: argparse.Namespace) -> tuple:
    a = _load(args.pattern)
    knot, z = build_pair(a, args.m)
    table = hfk_table(knot)
    poly = alexander_polynomial(table)
    data = {
        "pattern": a.name,
        "m": args.m,
        "hfk": table.to_json()["entries"],
        "alexander": {str(i): c for i, c in sorted(poly.coeffs.items())},
        "genus": table.genus(),
        "total_dim": table.total_dim(),
        "tau": tau(knot, z),
        "thickness": thickness(table),
    }
    if args.format == "json":
        text = json.dumps(data, indent=2) + "\n"
    elif args.format == "tsv":
        text = "a\th\tdim\n" + "".join(f"{a_}\t{h}\t{n}\n" for (a_, h), n in sorted(table.dims.items()))
    else:
        lines = [table.to_text(), f"Delta = {poly}", f"genus = {data['genus']}", f"total_dim = {data['total_dim']}"]
        lines += [f"tau = {data['tau']}", f"th = {data['thickness']}"]
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> tuple:
    if args.m_from > args.m_to:
        raise InputError("--from must not exceed --to")
    if args.tail_window < 3:
        raise InputError("--tail-window must be at least 3")
    a = _load(args.pattern)
    report = sweep(a, args.m_from, args.m_to, args.k, args.tail_window, args.jobs)
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    elif args.format == "tsv":
        text = to_tsv(report)
    else:
        lines = [to_tsv(report).rstrip("\n"), ""]
        for name, fit in report.fits.items():
            lines.append(f"fit {name}: " + (f"{fit.slope}*m + {fit.intercept} (from m={fit.tail_start})" if fit else "none"))
        lines += [f"{k} = {v}" for k, v in report.derived.items()]
        lines += [f"[{'PASS' if ok else 'FAIL'}] {name}" for name, ok in report.verdicts.items()]
        text = "\n".join(lines) + "\n"
    for name, ok in report.verdicts.items():
        if not ok:
            print(f"verification failed: {name}", file=sys.stderr)
    return text, EXIT_OK if report.ok else EXIT_VERIFY


def cmd_verify(args: argparse.Namespace) -> tuple:
    a = _load(args.pattern)
    m = args.m
    depth = max(m + 2, (a.max_args() or 0) + 1)
    checks: Dict[str, List[str]] = {}
    checks["op_gradings"] = [str(v) for v in verify_op_gradings(a, family_bound=depth).violations]
    for view in ("knot", "full"):
        rep = verify_a_infinity(a, view, depth)
        checks[f"a_infinity_{view}"] = [str(v) for v in rep.violations]
    td = verify_type_d(build_cfd_one_over_m(m))
    checks["type_d"] = list(td.problems) + ([] if td.bounded else ["unbounded"])
    for view in ("knot", "full"):
        cx = build_complex(a, view, m)
        checks[f"d_squared_{view}"] = [] if square_is_zero(cx.columns) else [f"d^2 != 0 at m={m}"]
    try:
        build_pair(a, m)
        checks["bigrading"] = []
    except (BigradingError, InvalidPatternError) as exc:
        checks["bigrading"] = [str(exc)]
    ok = all(not v for v in checks.values())
    if args.format == "json":
        text = json.dumps({"pattern": a.name, "m": m, "max_args": depth, "checks": checks, "ok": ok}, indent=2) + "\n"
    else:
        lines = [f"pattern {a.name}, m={m}, A-infinity words up to length {depth}"]
        for name, problems in checks.items():
            lines.append(f"[{'PASS' if not problems else 'FAIL'}] {name}")
            lines += [f"    {p}" for p in problems]
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_VERIFY


def cmd_predict(args: argparse.Namespace) -> tuple:
    path = resolve_pattern(args.pattern)
    raw = json.loads(path.read_text(encoding="utf-8"))
    ms = list(range(args.m_from, args.m_to + 1))
    if args.m_from > args.m_to:
        raise InputError("--from must not exceed --to")
    if "components" in raw:
        system = curves.load_curves(path)
        dims = {m: curves.predicted_dim(system, m) for m in ms}
        data = {"curves": system.to_json(), "predicted": dims}
        ok = True
    else:
        a = _load(args.pattern)
        if len(ms) < HELD_OUT + 2:
            raise InputError(f"predict needs at least {HELD_OUT + 2} values of m")
        measured = {m: compute_record(a, m, 1).total_dim for m in ms}
        # fit on a window just before the last HELD_OUT points, then check those
        fit_ms = ms[:-HELD_OUT][-args.tail_window:]
        held = ms[-HELD_OUT:]
        try:
            big_d, small_d = curves.fit_curve_from_dims([(m, measured[m]) for m in fit_ms])
            system = curves.fitted_system(big_d, small_d)
            predicted = {m: curves.predicted_dim(system, m) for m in held}
        except (ValueError, curves.SlopeCollisionError) as exc:
            print(f"verification failed: {exc}", file=sys.stderr)
            return json.dumps({"measured": measured}, indent=2) + "\n", EXIT_VERIFY
        ok = all(predicted[m] == measured[m] for m in held)
        data = {
            "pattern": a.name,
            "D": big_d,
            "d": small_d,
            "fit_range": [fit_ms[0], fit_ms[-1]],
            "curves": system.to_json(),
            "measured": measured,
            "predicted": predicted,
        }
    if args.format == "json":
        text = json.dumps(data, indent=2) + "\n"
    elif args.format == "tsv":
        pred = data["predicted"]
        text = "m\tpredicted\n" + "".join(f"{m}\t{pred[m]}\n" for m in sorted(pred))
    else:
        lines = []
        if "D" in data:
            lines.append(f"D = {data['D']}, d = {data['d']}")
        measured = data.get("measured", {})
        for m, n in sorted(data["predicted"].items()):
            extra = f" (measured {measured[m]})" if m in measured else ""
            lines.append(f"m={m}: {n}{extra}")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {"compute": cmd_compute, "sweep": cmd_sweep, "verify": cmd_verify, "predict": cmd_predict}


def run(argv: Optional[Sequence[str]] = None, stdout: TextIO = sys.stdout) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        text, code = COMMANDS[args.command](args)
    except (InputError, PatternError, curves.SlopeCollisionError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BigradingError, InvalidPatternError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
