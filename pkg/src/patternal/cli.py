"""Command-line interface.

Exit codes: 0 success (``decide``: unavoidable), 1 ``decide`` found the set
avoidable or ``ucycle validate`` rejected its input, 2 usage, parse or cap
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formulas
from .avoidability import ParseError, decide, parse_prohibition_set
from .graphs import build_graph, export_graph, longest_chordless_path
from .limits import InstanceTooLarge
from .ucycle import generate_ucycle, parse_ucycle, validate_ucycle
from .words import format_word

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _emit(text: str, output: str | None = None) -> None:
    if output and output != "-":
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"-{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise CliError(f"missing {', '.join(missing)}")


# -- formulas --------------------------------------------------------------


def cmd_formulas(args: argparse.Namespace) -> int:
    what = args.what
    as_json = args.format == "json"
    if what == "table1":
        rows = formulas.table1(a=args.m or 2)
        if as_json:
            _emit(json.dumps([r.to_json() for r in rows]) + "\n")
        else:
            _emit(" n Mw\n" + "".join(f"{r.n:>2} {r.value}\n" for r in rows))
        return EXIT_OK

    _need(args, "n", "m")
    n, m = args.n, args.m
    if what in ("mw", "tp", "patterns"):
        if what == "mw":
            res = formulas.mw_count(n, m)
        elif what == "tp":
            res = formulas.tp_count(n, m, printed=args.printed)
        else:
            res = formulas.pattern_count(n, m)
        _emit(json.dumps(res.to_json()) + "\n" if as_json else f"{res.value}\n")
    elif what == "bounds":
        b = formulas.cp_bounds(n, m, printed=args.printed)
        rec = {"kind": "CpBounds", "n": n, "m": m, "lower": b.lower, "upper": b.upper}
        _emit(json.dumps(rec) + "\n" if as_json else f"lower: {b.lower}\nupper: {b.upper}\n")
    elif what == "lengths":
        e = formulas.extremal_lengths(n, m)
        rec = {"kind": "Lengths", "n": n, "m": m, "Lw": e.lw, "Lp_binary": e.lp_binary}
        if args.cp is not None:
            rec["Lp"] = e.lp_from_cp(args.cp)
        if as_json:
            _emit(json.dumps(rec) + "\n")
        else:
            _emit("".join(f"{k}: {v}\n" for k, v in rec.items() if k not in ("kind", "n", "m")))
    elif what == "identity":
        c = formulas.identity_check(n, m, printed=args.printed)
        rec = {"kind": "Identity", "n": n, "m": m, "lhs": c.lhs, "rhs": c.rhs, "equal": c.equal}
        if as_json:
            _emit(json.dumps(rec) + "\n")
        else:
            _emit(f"lhs: {c.lhs}\nrhs: {c.rhs}\nequal: {str(c.equal).lower()}\n")
    return EXIT_OK


# -- decide ----------------------------------------------------------------


def cmd_decide(args: argparse.Namespace) -> int:
    s = parse_prohibition_set(_read(args.input))
    report = decide(s, max_vertices=args.max_vertices)
    if args.format == "json":
        _emit(json.dumps(report.to_json()) + "\n", args.output)
    elif report.unavoidable:
        _emit(
            f"verdict: unavoidable\nlw: {report.lw}\n"
            f"longest free word: {format_word(report.longest_free_word, s.m)}\n",
            args.output,
        )
    else:
        cycle = " -> ".join(format_word(v, s.m) for v in report.witness_cycle)
        _emit(
            f"verdict: avoidable\nwitness cycle: {cycle}\nperiod: {format_word(report.period, s.m)}\n",
            args.output,
        )
    return EXIT_OK if report.unavoidable else EXIT_NO


# -- ucycle ----------------------------------------------------------------


def cmd_ucycle(args: argparse.Namespace) -> int:
    if args.action == "generate":
        _need(args, "n", "m")
        u = generate_ucycle(args.n, args.m, max_vertices=args.max_vertices)
        if not validate_ucycle(u):
            raise AssertionError("generated cycle failed validation")
        _emit(u.to_text(), args.output)
        return EXIT_OK
    if args.input is None:
        raise CliError("validate needs --input")
    try:
        u = parse_ucycle(_read(args.input))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    ok = validate_ucycle(u)
    _emit(f"valid: {str(ok).lower()}\n")
    return EXIT_OK if ok else EXIT_NO


# -- graph -----------------------------------------------------------------


def cmd_graph(args: argparse.Namespace) -> int:
    _need(args, "n", "m")
    g = build_graph(args.kind, args.n, args.m, max_vertices=args.max_vertices)
    if args.action == "export":
        fmt = args.format or "json"
        if fmt not in ("json", "dot"):
            raise CliError("export format must be json or dot")
        data = export_graph(g, fmt)
        if args.output and args.output != "-":
            Path(args.output).write_bytes(data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        return EXIT_OK

    res = longest_chordless_path(g, budget=args.budget)
    label = "exact" if res.exact else "lower bound"
    path = [format_word(v, args.m) for v in res.path.vertices]
    if args.format == "json":
        rec = {"kind": args.kind, "n": args.n, "m": args.m, "C": res.length, "exact": res.exact, "path": path}
        _emit(json.dumps(rec) + "\n", args.output)
    else:
        _emit(f"C = {res.length} ({label})\npath: {' -> '.join(path)}\n", args.output)
    if args.strict and not res.exact:
        print("error: search budget exhausted", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patternal",
        description="Unavoidable sets of words and patterns, overlap graphs, universal cycles.",
    )
    parser.add_argument("--max-vertices", type=_positive, default=None,
                        help="vertex cap (default 10^6, or $PATTERNAL_MAX_VERTICES)")
    sub = parser.add_subparsers(dest="command", required=True)

    def nm(p: argparse.ArgumentParser) -> None:
        p.add_argument("-n", type=int, default=None, help="word / pattern length")
        p.add_argument("-m", "-a", dest="m", type=int, default=None, help="alphabet size")

    p = sub.add_parser("formulas", help="evaluate counting formulas")
    p.add_argument("what", choices=["mw", "tp", "patterns", "bounds", "lengths", "identity", "table1"])
    nm(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--printed", action="store_true",
                   help="use the single-sieve class count (wrong once min(i, m) >= 4)")
    p.add_argument("--cp", type=int, default=None, help="chordless path length, for 'lengths'")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("decide", help="decide a prohibition-set file")
    p.add_argument("--input", "-i", required=True, help="prohibition-set file ('-' for stdin)")
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("ucycle", help="generate or validate universal cycles for patterns")
    p.add_argument("action", choices=["generate", "validate"])
    nm(p)
    p.add_argument("--input", "-i", default=None)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_ucycle)

    p = sub.add_parser("graph", help="export graphs or search chordless paths")
    p.add_argument("action", choices=["export", "search"])
    p.add_argument("--kind", choices=["debruijn", "pattern"], default="pattern")
    nm(p)
    p.add_argument("--format", choices=["text", "json", "dot"], default=None)
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--budget", type=_positive, default=None, help="node expansions (default 10^8)")
    p.add_argument("--strict", action="store_true", help="exit 2 if the search was cut short")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
