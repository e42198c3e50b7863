"""Command-line interface.

Exit codes: 0 solvable (or check passed), 1 unsolvable (or check failed),
2 bad input or usage, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .documents import (
    ProblemDocument,
    fmt,
    fmt_decimal,
    fmt_set,
    fmt_tuple,
    parse_problem,
    parse_solution,
    render_problem,
)
from .errors import BipolarError, EnumerationCapExceeded
from .kernels import BACKEND
from .model import preprocess
from .oracle import DEFAULT_MAX_ORACLE, oracle_solve, random_instance, verify_solution
from .system import (
    DEFAULT_MAX_ENUM,
    DEFAULT_MAX_SEARCH,
    enumerate_families,
    extremal_system,
    system_solvable,
)

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem(text)


class _InputError(Exception):
    pass


def _witness_doc(witness):
    doc = {"kind": witness.kind, "message": witness.describe()}
    if witness.kind == "fre-unsolvable":
        doc.update(row=witness.row + 1, attained=fmt(witness.attained),
                   target=fmt(witness.target))
    elif witness.kind == "negation-gap":
        doc.update(column=witness.column + 1, x_bar=fmt(witness.x_bar),
                   y_bar=fmt(witness.y_bar))
    else:
        doc["row_options"] = [
            {"row": i + 1, "plus": [j + 1 for j in ps], "minus": [j + 1 for j in qs]}
            for i, (ps, qs) in enumerate(witness.row_options)
        ]
        c = witness.conflict
        if c is not None:
            doc["conflict"] = {
                "column": c.column + 1,
                "plus_row": c.plus_row + 1,
                "minus_row": c.minus_row + 1,
                "x_bar_plus_y_bar": fmt(c.total),
            }
    return doc


def _expand_fre(fre, prep):
    return {
        "solvable": fre.fre_solvable,
        "x_bar": fmt_tuple(prep.expand(fre.x_bar)),
        "y_bar": fmt_tuple(prep.expand(fre.y_bar)),
    }


def _orig_set(indices, prep):
    return fmt_set(prep.column_map[j] for j in indices)


def cmd_solve(args):
    doc = _load(args.file)
    system, prep = preprocess(doc.to_system())
    report = extremal_system(system, args.max_search, args.max_enum)

    def sol(x):
        return None if x is None else fmt_tuple(prep.expand(x))

    out = {
        "command": "solve",
        "verdict": "solvable" if report.solvable else "unsolvable",
        "dimensions": {"n": system.n, "m": prep.original_m},
        "free_columns": fmt_set(prep.dropped_columns),
        "fre_greatest": _expand_fre(report.fre, prep),
    }
    if report.solvable:
        cert = report.certificate
        fam = report.families
        out["certificate"] = {"j_plus": _orig_set(cert.j_plus, prep),
                              "j_minus": _orig_set(cert.j_minus, prep)}
        out["families"] = {
            "s_plus_maximal": [_orig_set(s, prep) for s in fam.s_plus_maximal],
            "s_minus_maximal": [_orig_set(s, prep) for s in fam.s_minus_maximal],
        }
        out["solutions"] = {
            "greatest": sol(report.greatest),
            "least": sol(report.least),
            "maximal": [sol(x) for x in report.maximal],
            "minimal": [sol(x) for x in report.minimal],
        }
        out["annotations"] = {"decimal": {
            "maximal": [[fmt_decimal(v) for v in prep.expand(x)] for x in report.maximal],
            "minimal": [[fmt_decimal(v) for v in prep.expand(x)] for x in report.minimal],
        }}
    else:
        out["witness"] = _witness_doc(report.witness)
    return out, EXIT_OK if report.solvable else EXIT_NO


def cmd_check(args):
    doc = _load(args.file)
    system = doc.to_system()
    candidate = Path(args.solution)
    text = candidate.read_text() if candidate.is_file() else args.solution
    x = parse_solution(text)
    check = verify_solution(system, x)
    out = {
        "command": "check",
        "solution": fmt_tuple(x),
        "rows": [
            {"row": i + 1, "value": fmt(r.value), "target": fmt(r.target), "ok": r.ok}
            for i, r in enumerate(check.rows)
        ],
        "verdict": check.ok,
    }
    return out, EXIT_OK if check.ok else EXIT_NO


def cmd_pairs(args):
    doc = _load(args.file)
    system, prep = preprocess(doc.to_system())
    verdict = system_solvable(system, args.max_search)
    out = {"command": "pairs", "verdict": "solvable" if verdict.solvable else "unsolvable"}
    if not verdict.solvable:
        out["witness"] = _witness_doc(verdict.witness)
        return out, EXIT_NO
    fam = enumerate_families(system, args.max_enum)
    out.update(
        s_plus=[_orig_set(s, prep) for s in fam.s_plus],
        s_minus=[_orig_set(s, prep) for s in fam.s_minus],
        s_plus_maximal=[_orig_set(s, prep) for s in fam.s_plus_maximal],
        s_minus_maximal=[_orig_set(s, prep) for s in fam.s_minus_maximal],
    )
    return out, EXIT_OK


def cmd_oracle(args):
    doc = _load(args.file)
    system, prep = preprocess(doc.to_system())
    rep = oracle_solve(system, args.max_oracle)

    def expand(xs):
        return [fmt_tuple(prep.expand(x)) for x in xs]

    out = {
        "command": "oracle",
        "verdict": "solvable" if rep.solvable else "unsolvable",
        "free_columns": fmt_set(prep.dropped_columns),
        "extreme_solutions": expand(rep.extreme_solutions),
        "maximal": expand(rep.maximal),
        "minimal": expand(rep.minimal),
    }
    return out, EXIT_OK if rep.solvable else EXIT_NO


def cmd_gen(args):
    system = random_instance(args.seed, args.m, args.n, args.grid)
    text = render_problem(ProblemDocument.from_system(system))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return None, EXIT_OK


def _render_text(out):
    lines = []
    for key, value in out.items():
        if key == "command":
            continue
        if isinstance(value, dict):
            lines.append(f"{key}:")
            for k, v in value.items():
                lines.append(f"  {k}: {_text_value(v)}")
        elif isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            lines.append(f"{key}: ({len(value)})")
            for v in value:
                lines.append(f"  {_text_value(v)}")
        else:
            lines.append(f"{key}: {_text_value(value)}")
    return "\n".join(lines) + "\n"


def _text_value(v):
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        if v and all(isinstance(e, int) for e in v):
            return "{" + ",".join(map(str, v)) + "}"
        if not v:
            return "{}" if v == [] else "()"
        if all(isinstance(e, str) for e in v):
            return "(" + ", ".join(v) + ")"
        return "[" + "; ".join(_text_value(e) for e in v) + "]"
    if isinstance(v, dict):
        return ", ".join(f"{k}={_text_value(e)}" for k, e in v.items())
    return str(v)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="structured",
                        help="human-readable text or JSON (default)")
    common.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM,
                        help="largest m for full family enumeration (default %(default)s)")
    common.add_argument("--max-search", type=int, default=DEFAULT_MAX_SEARCH,
                        help="largest number of undecided columns in the "
                             "solvability search (default %(default)s)")
    common.add_argument("--max-oracle", type=int, default=DEFAULT_MAX_ORACLE,
                        help="largest m the brute-force oracle accepts (default %(default)s)")
    common.add_argument("--timing", action="store_true",
                        help="add wall-clock milliseconds to the report")

    parser = argparse.ArgumentParser(
        prog="bipolar-fre",
        description="Exact solver for bipolar max-product fuzzy relation equations.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="solvability and extremal solutions")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", parents=[common], help="evaluate a candidate solution")
    p.add_argument("file")
    p.add_argument("solution", help="file or inline tuple such as '(0.4,0.5)'")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pairs", parents=[common], help="families of feasible index sets")
    p.add_argument("file")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("oracle", parents=[common], help="brute-force extreme-tuple solver")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="write a random problem file")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, required=True, help="grid denominator d")
    p.add_argument("out", help="output path, or - for stdout")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        out, code = args.func(args)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (BipolarError, _InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if out is None:
        return code
    if args.timing:
        out["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if args.format == "text":
        sys.stdout.write(_render_text(out))
    else:
        sys.stdout.write(json.dumps(out, indent=2, ensure_ascii=False) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
