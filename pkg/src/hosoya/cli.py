"""Command-line interface.

Exit status: 0 when every check passes, 1 when an identity fails, 2 on
usage or parameter-domain errors.

Examples::

    hosoya render --rows 7 --format csv
    hosoya render --rows 9 --format svg --highlight diagonal:d=3,count=6 --out tri.svg
    hosoya verify CASSINI --k 1..200
    hosoya verify RUNG_SUM --k 5 --j 2
    hosoya verify TRIANGLE_CONFIG --paper-form --n 4 --r 2
    hosoya verify JOHNSON                   # the row's built-in grid
    hosoya config hockey_stick:k=3,count=3,side=left
    hosoya sequence --d 2 --count 6
    hosoya oracle-check --rows 300
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import identities, oracle
from .errors import CoordinateError, DomainError
from .geometry import ConfigSpec
from .render import FORMATS, RenderOptions, render
from .reports import ReportDocument

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_params(tokens: list[str]) -> dict[str, str]:
    params: dict[str, str] = {}
    it = iter(tokens)
    for tok in it:
        if not tok.startswith("--") or len(tok) < 3:
            raise UsageError(f"unexpected argument {tok!r}")
        name, eq, value = tok[2:].partition("=")
        if not eq:
            try:
                value = next(it)
            except StopIteration:
                raise UsageError(f"--{name} needs a value") from None
        params[name.replace("-", "_")] = value
    return params


def _is_grid(value: str) -> bool:
    return ".." in value or "," in value


def cmd_render(args) -> int:
    highlight = ConfigSpec.parse(args.highlight) if args.highlight else None
    opts = RenderOptions(args.rows, args.format, highlight)
    _emit(render(opts), args.out)
    return OK


def cmd_verify(args, extra: list[str]) -> int:
    try:
        ident = identities.get(args.id)
    except KeyError:
        raise UsageError(f"unknown identity {args.id!r}; known: {', '.join(identities.CATALOG)}") from None
    params = _parse_params(extra)
    unknown = [p for p in params if p not in ident.params]
    if unknown:
        raise UsageError(f"{ident.id} takes --{' --'.join(ident.params)}; got unknown --{unknown[0]}")
    ev = oracle.build(args.oracle_rows) if args.oracle else identities.CLOSED_FORM
    started = time.perf_counter()
    if not params or any(_is_grid(v) for v in params.values()):
        ranges = None
        if params:
            base = ident.paper_grid if args.paper_form and ident.paper_grid else ident.grid
            ranges = {name: params.get(name, base.get(name)) for name in ident.params
                      if name in params or name in base}
            ranges.update({k: v for k, v in params.items() if k not in ranges})
        result = identities.sweep(ident.id, ranges, paper_form=args.paper_form, ev=ev)
        summary = f"{ident.id}: {result.instances} checked, {len(result.failures)} failures"
        if result.paper_failures is not None and not args.paper_form:
            summary += f"; paper-stated form failed on {result.paper_failures} of {result.paper_instances}"
    else:
        values = {}
        for name, text in params.items():
            try:
                values[name] = int(text)
            except ValueError:
                values[name] = text
        result = identities.verify(ident.id, values, paper_form=args.paper_form, ev=ev)
        summary = f"{ident.id}: {'holds' if result.holds else 'FAILS'}" + (f" ({result.note})" if result.note else "")
    inputs = {"id": ident.id, "paper_form": args.paper_form, "evaluator": getattr(ev, "name", "closed-form")}
    inputs.update(params)
    doc = ReportDocument("verify", inputs, [result])
    _emit(doc.to_json(), args.out)
    print(summary + f" [{time.perf_counter() - started:.2f}s]", file=sys.stderr)
    return OK if result.holds else FAILED


def cmd_config(args) -> int:
    spec = ConfigSpec.parse(args.spec)
    points = spec.materialize()
    if args.format == "json":
        _emit(json.dumps(points.to_dict(), indent=2) + "\n", args.out)
    else:
        lines = [f"{spec.kind.value} {spec.parameters}"]
        for (p, v), role in zip(points.points, points.roles):
            lines.append(f"  H({p.r},{p.k}) = {v}" + (f"  [{role}]" if role else ""))
        _emit("\n".join(lines) + "\n", args.out)
    return OK


def cmd_sequence(args) -> int:
    if args.d < 1 or args.count < 2:
        raise DomainError("sequence", "d >= 1 and count >= 2")
    seq = identities.ladder_sequence(args.d, args.count)
    _emit(",".join(str(v) for v in seq) + "\n", args.out)
    return OK


def cmd_oracle_check(args) -> int:
    started = time.perf_counter()
    table = oracle.build(args.rows)
    check = oracle.cross_check(table)
    elapsed = time.perf_counter() - started
    doc = {
        "rows": f"0..{args.rows}",
        "entries": str(check.entries),
        "overlap_checks": str(table.overlap_checks),
        "mismatches": str(check.count),
        "mismatched_points": [[str(r), str(k)] for r, k in check.mismatches[:50]],
        "elapsed_seconds": f"{elapsed:.6f}",
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    print(f"oracle-check: {check.entries} entries, {check.count} mismatches [{elapsed:.2f}s]", file=sys.stderr)
    return OK if check.count == 0 else FAILED


def cmd_list(args) -> int:
    for ident in identities.CATALOG.values():
        print(f"{ident.id:18s} {ident.status:10s} ({', '.join(ident.params)})  {ident.claim}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hosoya", description="Hosoya triangle identities, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", help="draw rows 0..ROWS of the triangle")
    p.add_argument("--rows", type=int, default=7)
    p.add_argument("--format", default="ascii", choices=FORMATS)
    p.add_argument("--highlight", metavar="SPEC", help="configuration, e.g. vertical_run:r=2,k=1,count=3")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="verify one instance or sweep a grid",
                       epilog="identity parameters are passed as --NAME VALUE; VALUE may be lo..hi or a,b,c")
    p.add_argument("id")
    p.add_argument("--paper-form", action="store_true", help="check the published statement of a corrected row")
    p.add_argument("--oracle", action="store_true", help="evaluate with the recursion-built table")
    p.add_argument("--oracle-rows", type=int, default=420)
    p.add_argument("--out")

    p = sub.add_parser("config", help="materialize a configuration")
    p.add_argument("spec")
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--out")

    p = sub.add_parser("sequence", help="generalized Fibonacci sequence from an oblique ladder")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", "-n", type=int, default=10)
    p.add_argument("--out")

    p = sub.add_parser("oracle-check", help="compare the recursive table with the closed form")
    p.add_argument("--rows", type=int, default=300)
    p.add_argument("--out")

    sub.add_parser("list", help="list catalog identities")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    try:
        if args.command != "verify" and extra:
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        if args.command == "verify":
            return cmd_verify(args, extra)
        handler = {
            "render": cmd_render,
            "config": cmd_config,
            "sequence": cmd_sequence,
            "oracle-check": cmd_oracle_check,
            "list": cmd_list,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hosoya: error: {exc}", file=sys.stderr)
        return USAGE
    except (DomainError, CoordinateError, ValueError) as exc:
        print(f"hosoya: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
