"""Command-line interface: ``flagcurves <command> [options]``.

Every command builds a JSON document first; text output is rendered from
it.  Exit status is 0 on success (an undetermined classification included),
1 on a verification mismatch and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import lie1d, selfcheck
from .classify import classify_curve, p_conjugacy_search, render_table, reproduce_table
from .criterion import build_criterion_system
from .errors import FlagCurvesError, ParseError
from .groebner import DEFAULT_BUDGET
from .matrix import matrix_from_json
from .series import DEFAULT_ORDER

log = logging.getLogger("flagcurves")

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

LIE1D_SUITES = ("closure", "ode", "coordchange", "flow")


def read_input(source: str):
    """A file path, ``-`` for stdin, or inline JSON."""
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {source if len(source) < 40 else 'input'}: {exc}") from None


def _matrix_block(label, rows):
    width = max(len(c) for row in rows for c in row)
    out = [f"{label}:"]
    out += ["  [ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in rows]
    return out


# renderers: JSON document -> text


def render_classification(doc: dict) -> str:
    lines = [f"status: {doc['status']}"]
    if "Y" in doc:
        lines += _matrix_block("Y", doc["Y"])
        lines += _matrix_block("r", doc["r"])
        lines.append("assignment: " + ", ".join(f"{k} = {v}" for k, v in doc["assignment"].items()))
    if "certificate" in doc:
        lines.append("certificate (reduced Groebner basis): {" + ", ".join(doc["certificate"]) + "}")
    if "reason" in doc:
        lines.append(f"reason: {doc['reason']}")
    if "system" in doc:
        lines += render_system(doc["system"]).splitlines()
    return "\n".join(lines)


def render_system(doc: dict) -> str:
    lines = ["unknowns: " + ", ".join(doc["unknowns"]), f"equations ({len(doc['equations'])}):"]
    lines += [f"  {e} = 0" for e in doc["equations"]]
    return "\n".join(lines)


def render_conjugacy(doc: dict) -> str:
    lines = [f"status: {doc['status']}"]
    for key in ("levi", "Z", "p"):
        if key in doc:
            lines += _matrix_block(key, doc[key])
    if "solver" in doc:
        lines.append("solver: " + json.dumps(doc["solver"]))
    return "\n".join(lines)


def render_reports(docs: list[dict]) -> str:
    lines = []
    for rep in docs:
        lines.append(rep["title"])
        for c in rep["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            lines.append(f"  [{mark}] {c['name']}" + (f"  ({c['detail']})" if c["detail"] else ""))
    total = sum(len(r["checks"]) for r in docs)
    failed = sum(not c["passed"] for r in docs for c in r["checks"])
    lines.append(f"{total - failed}/{total} checks passed")
    return "\n".join(lines)


def _first_failure(docs):
    for rep in docs:
        for c in rep["checks"]:
            if not c["passed"]:
                return f"{rep['title']}: {c['name']}"
    return None


# commands: each returns (document, renderer, exit status)


def cmd_classify(args):
    x = matrix_from_json(read_input(args.input))
    started = time.perf_counter()
    result = classify_curve(x.context, x, args.budget)
    log.info("classified in %.3fs", time.perf_counter() - started)
    doc = result.to_json()
    if args.verbose:
        doc["system"] = result.system.to_json()
    return doc, render_classification, EXIT_OK


def cmd_criterion(args):
    x = matrix_from_json(read_input(args.input))
    doc = build_criterion_system(x.context, x).to_json()
    return doc, render_system, EXIT_OK


def cmd_conjugate(args):
    if args.target is None:
        doc = read_input(args.input)
        if not isinstance(doc, dict) or "from" not in doc or "to" not in doc:
            raise ParseError('a single conjugate input must be {"from": <matrix>, "to": <matrix>}')
        x1, x2 = matrix_from_json(doc["from"]), matrix_from_json(doc["to"])
    else:
        x1 = matrix_from_json(read_input(args.input))
        x2 = matrix_from_json(read_input(args.target))
    if x1.context != x2.context:
        raise ParseError("both matrices must live in the same flag context")
    for m in (x1, x2):
        if not m.in_n():
            raise ParseError("conjugate expects matrices in the nilradical pattern")
    result = p_conjugacy_search(x1.context, x1, x2, args.budget)
    return result.to_json(), render_conjugacy, EXIT_OK


def cmd_table(args):
    doc = reproduce_table(args.budget).to_json()
    return doc, render_table, EXIT_OK if doc["allMatch"] else EXIT_MISMATCH


def cmd_lie1d(args):
    suites = {
        "closure": lambda: lie1d.closure_suite(),
        "ode": lambda: lie1d.verify_ode_solutions(order=args.order),
        "coordchange": lambda: lie1d.coordinate_change_suite(order=args.order),
        "flow": lambda: lie1d.flow_identities(),
    }
    chosen = [args.suite] if args.suite else list(LIE1D_SUITES)
    docs = [suites[name]().to_json() for name in chosen]
    return docs, render_reports, EXIT_OK if all(d["passed"] for d in docs) else EXIT_MISMATCH


def cmd_check_all(args, table_expected=None):
    reports = selfcheck.run_all(args.order, args.budget, args.seed, table_expected)
    docs = [r.to_json() for r in reports]
    failure = _first_failure(docs)
    if failure:
        print(f"first failing item: {failure}", file=sys.stderr)
    return docs, render_reports, EXIT_MISMATCH if failure else EXIT_OK


def _int_at_least(lo):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be at least {lo}")
        return v

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--order", type=_int_at_least(8), default=DEFAULT_ORDER, help="series truncation order (>= 8)")
    common.add_argument("--budget", type=_int_at_least(1000), default=DEFAULT_BUDGET, help="solver reduction-step budget")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="flagcurves", description="Classify distinguished curves on flag manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="projective or affine-only reparameterisation")
    p.add_argument("input", help="matrix JSON: file path, '-' for stdin, or inline")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("criterion", parents=[common], help="dump the criterion polynomial system")
    p.add_argument("input")
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("conjugate", parents=[common], help="search for p in P with Ad_p X1 = X2")
    p.add_argument("input", help='first matrix, or {"from": ..., "to": ...}')
    p.add_argument("target", nargs="?", help="second matrix")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("table", parents=[common], help="reproduce the SL(3) table of normal forms")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("lie1d", parents=[common], help="one-dimensional vector field checks")
    p.add_argument("suite", nargs="?", choices=LIE1D_SUITES)
    p.set_defaults(func=cmd_lie1d)

    p = sub.add_parser("paper-check", parents=[common], help="run every worked computation end to end")
    p.set_defaults(func=cmd_check_all)
    return parser


def main(argv=None, table_expected=None) -> int:
    """Entry point.  ``table_expected`` overrides the table's reference
    column for the check-all run; it exists so tests can run a negative control."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.func is cmd_check_all:
            doc, render, status = cmd_check_all(args, table_expected)
        else:
            doc, render, status = args.func(args)
    except (FlagCurvesError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(doc, indent=2) if args.json else render(doc))
    return status


if __name__ == "__main__":
    sys.exit(main())
