"""Command-line front end.

Exit codes: 0 success, 1 dimensional or covariance failure, 2 parse error,
3 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .covariance import check_covariance
from .dimension import format_dim
from .errors import (
    DimcheckError,
    MissingValue,
    ModelError,
    NotDependent,
    UnknownEquation,
    UnknownSystem,
)
from .lang import check, format_model, parse, run_pi_query
from .lang.nodes import PiQuery
from .quantity import measure

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3
REPORT_VERSION = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _envelope(command: str, path: str, results=None, errors=None) -> dict:
    return {
        "version": REPORT_VERSION,
        "command": command,
        "file": path,
        "results": results or [],
        "errors": errors or [],
    }


def _emit(args, doc: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        for line in human:
            print(line)


def _load(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    return parse(text)


def cmd_check(args) -> int:
    model = _load(args)
    report = check(model)
    human = []
    for e in report.entries:
        status = {"pass": "PASS", "fail": "FAIL", "info": "INFO"}[e.status]
        line = f"{e.line:>4}  {status}  {e.kind:<8} {e.label}"
        if e.message and (e.status != "pass" or e.kind == "pigroups"):
            line += f"  -- {e.message}"
        human.append(line)
    n_fail = len(report.failures)
    human.append(f"{len(report.entries)} statements, {n_fail} failed")
    _emit(args, _envelope("check", args.file, [e.to_dict() for e in report.entries]), human)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_convert(args) -> int:
    model = _load(args)
    if args.var not in model.vars:
        raise UsageError(f"unknown variable {args.var!r}")
    if args.to not in model.registry:
        raise UsageError(f"unknown unit system {args.to!r}")
    q = model.quantity(args.var)
    value = measure(q, args.to)
    dname = format_dim(q.dim, model.dim_aliases)
    result = {
        "var": args.var,
        "from": {"value": q.value, "system": q.system},
        "to": {"value": value, "system": args.to},
        "dim": {"name": dname, "exps": list(q.dim.exps)},
    }
    _emit(args, _envelope("convert", args.file, [result]), [f"{args.var} = {value!r} {args.to} [{dname}]"])
    return EXIT_OK


def _pi_human(data: dict) -> list[str]:
    out = []
    head = f"pigroups {data['target']}" if data["target"] else "pigroups"
    out.append(f"{head} ({data['mode']}: {', '.join(data['given'])})")
    out.append(f"  independent: {', '.join(data['independent']) or '-'}")
    deps = [f"{d['name']} (p={d['p']}, ps={d['ps']})" for d in data["dependent"]]
    out.append(f"  dependent:   {', '.join(deps) or '-'}")
    out.append(f"  groups ({len(data['groups'])} = {data['total']} - {data['rank']}):")
    for g in data["groups"]:
        val = "" if g["value"] is None else f" = {g['value']!r}"
        out.append(f"    {g['group']}{val}")
    if data["law"]:
        out.append(f"  {data['law']['law']}")
    return out


def cmd_pigroups(args) -> int:
    model = _load(args)
    given = None
    if args.given is not None:
        given = tuple(g.strip() for g in args.given.split(",") if g.strip())
        if not given:
            raise UsageError("--given needs at least one name")
    for name in (args.target,) + (given or ()):
        if name is not None and name not in model.vars:
            raise UsageError(f"unknown variable {name!r}")
    if args.target is not None or given is not None:
        queries = [PiQuery(args.target, given)]
    else:
        queries = [s for s in model.statements if isinstance(s, PiQuery)] or [PiQuery(None, None)]

    results, human, code = [], [], EXIT_OK
    for q in queries:
        try:
            data, _ = run_pi_query(q, model)
            data["status"] = "pass"
            human.extend(_pi_human(data))
        except NotDependent as exc:
            code = EXIT_FAIL
            data = {"target": q.target, "status": "fail", "unreachable": list(exc.unreachable)}
            human.append(f"pigroups {q.target}: unreachable base: {', '.join(exc.unreachable)}")
        results.append(data)
    _emit(args, _envelope("pigroups", args.file, results), human)
    return code


def cmd_covariance(args) -> int:
    model = _load(args)
    try:
        rep = check_covariance(model, args.eq, trials=args.trials, tol=args.tol, seed=args.seed)
    except (UnknownEquation, MissingValue) as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    human = [
        f"covariance {rep.equation}: {rep.verdict.upper()} "
        f"({rep.trials - rep.failures}/{rep.trials} trials within tol {rep.tol:g}, "
        f"max rel error {rep.max_rel_error:.3g}, seed {rep.seed})"
    ]
    _emit(args, _envelope("covariance", args.file, [rep.to_dict()]), human)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_format(args) -> int:
    model = _load(args)
    sys.stdout.write(format_model(model))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dimcheck", description="Dimensional analysis checker for model files.")
    p.add_argument("--version", action="version", version=f"dimcheck {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, "check every statement of a model file")
    sp.add_argument("--json", action="store_true")

    sp = add("convert", cmd_convert, "measure a valued variable in another unit system")
    sp.add_argument("var")
    sp.add_argument("--to", required=True, metavar="SYSTEM")
    sp.add_argument("--json", action="store_true")

    sp = add("pigroups", cmd_pigroups, "dimensionless groups and scaling laws")
    sp.add_argument("--target", metavar="NAME")
    sp.add_argument("--given", metavar="a,b,c")
    sp.add_argument("--json", action="store_true")

    sp = add("covariance", cmd_covariance, "test a raw equation for covariance under unit changes")
    sp.add_argument("eq")
    sp.add_argument("--trials", type=int, default=100, metavar="N")
    sp.add_argument("--tol", type=float, default=1e-9, metavar="X")
    sp.add_argument("--seed", type=int, default=42, metavar="N")
    sp.add_argument("--json", action="store_true")

    add("format", cmd_format, "print the model in canonical form")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    json_mode = getattr(args, "json", False)
    try:
        return args.func(args)
    except ModelError as exc:
        err = {"line": exc.line, "col": exc.col, "end_col": exc.end_col,
               "kind": type(exc).__name__, "message": exc.message}
        if json_mode:
            print(json.dumps(_envelope(args.command, args.file, errors=[err]), indent=2))
        print(f"{args.file}:{exc.line}:{exc.col}: {type(exc).__name__}: {exc.message}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, UnknownSystem) as exc:
        code, failure = EXIT_USAGE, exc
    except DimcheckError as exc:
        code, failure = EXIT_FAIL, exc
    if json_mode:
        err = {"kind": type(failure).__name__, "message": str(failure)}
        print(json.dumps(_envelope(args.command, args.file, errors=[err]), indent=2))
    print(f"dimcheck: error: {failure}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
