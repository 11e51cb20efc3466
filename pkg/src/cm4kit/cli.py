"""Command-line front end: ``cm4kit <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from . import presentation as pres
from .catalogue import RELATION_SETS, default_table, derive_cm4, relations, table_text
from .polyring import (PolynomialParseError, TermOrder, buchberger, format_polynomial, gb_check,
                       parse_polynomial, parse_polynomial_lines)
from .varieties import a_ring

OUTPUT_DIR_ENV = "CM4KIT_OUTPUT_DIR"


@dataclass
class RunConfig:
    command: str
    seed: int = 0
    trials: int = 100
    n: int = 4
    order: str = "cm4"
    format: str = "text"
    output: str | None = None


def parse_order(spec: str) -> TermOrder:
    """``cm4`` (a14 > ... > a1), ``natural`` (a1 > ... > a14), or an explicit ``a14>a12>...`` list."""
    R = a_ring(4)
    spec = spec.strip()
    if spec == "cm4":
        return pres.CM4_ORDER
    if spec == "natural":
        return TermOrder(R.weights)
    names = [t.strip() for t in spec.split(">") if t.strip()]
    try:
        return TermOrder.from_names(R, names)
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad order specification {spec!r}: {exc}") from None


def parse_rational(text: str) -> Fraction:
    p = parse_polynomial(text, a_ring(4))
    if p.variables():
        raise PolynomialParseError("expected a rational number", 1, 1)
    return p.constant_term()


def _emit(text: str, cfg: RunConfig, suffix: str) -> None:
    path = cfg.output
    if path is None and os.environ.get(OUTPUT_DIR_ENV):
        name = cfg.command.replace(" ", "-")
        path = str(Path(os.environ[OUTPUT_DIR_ENV]) / f"{name}.{suffix}")
    if path:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text)
    sys.stdout.write(text)


def _emit_report(report: pres.PresentationReport, cfg: RunConfig) -> int:
    if cfg.format == "json":
        text = json.dumps(report.to_json(asdict(cfg)), indent=2, sort_keys=False) + "\n"
        _emit(text, cfg, "json")
    else:
        _emit(report.to_text(), cfg, "txt")
    return 0 if report.passed else 1


def _single(suite: str, checks, order: TermOrder | None = None) -> pres.PresentationReport:
    report = pres.PresentationReport(suite, order=order)
    report.extend(checks)
    return report


def _read_basis(path: str):
    R = a_ring(4)
    return parse_polynomial_lines(Path(path).read_text(), R)


def run(cfg: RunConfig, args: argparse.Namespace) -> int:
    order = parse_order(cfg.order)
    cmd = cfg.command
    if cmd == "verify cm":
        return _emit_report(pres.verify_variety("CM", cfg.trials, cfg.seed, cfg.n), cfg)
    if cmd == "verify com":
        return _emit_report(pres.verify_variety("COM", cfg.trials, cfg.seed, cfg.n), cfg)
    if cmd == "verify brackets":
        return _emit_report(_single("verify brackets", pres.verify_brackets(args.points, cfg.seed)), cfg)
    if cmd == "derive relations":
        d = derive_cm4()
        if cfg.format == "json":
            data = {"relations": {k: format_polynomial(p) for k, p in d.derived.polynomials.items()},
                    "comparison": {c.name: c.status for c in d.comparisons}}
            _emit(json.dumps(data, indent=2) + "\n", cfg, "json")
        else:
            lines = [f"# {c.name}: {c.status}\n{format_polynomial(d.derived[c.name])}"
                     for c in d.comparisons]
            _emit("\n".join(lines) + "\n", cfg, "txt")
        return 0 if d.ok else 1
    if cmd == "groebner check":
        if args.input:
            polys = {f"#{k}": p for k, p in enumerate(_read_basis(args.input))}
            checks = pres.certify_gb_cm4(order, complete=False, polys=polys)
        else:
            checks = pres.certify_gb_cm4(order, complete=False)
        return _emit_report(_single("groebner check", checks, order), cfg)
    if cmd == "groebner complete":
        if args.input:
            G = buchberger(_read_basis(args.input), order)
            text = "".join(format_polynomial(g, order) + "\n" for g in G)
            _emit(f"# reduced basis, {order.describe(a_ring(4))}\n" + text, cfg, "txt")
            return 0 if gb_check(G, order).passed else 1
        checks = pres.certify_gb_cm4(order, complete=True)
        return _emit_report(_single("groebner complete", checks, order), cfg)
    if cmd == "hilbert":
        check, hs = pres.certify_hilbert_cm4(order)
        if cfg.format == "text":
            _emit(f"{hs}\n[{check.status.upper()}] {check.name}\n", cfg, "txt")
            return 0 if check.passed else 1
        return _emit_report(_single("hilbert", [check], order), cfg)
    if cmd == "basis":
        return _emit_report(_single("basis", pres.certify_free_basis(order), order), cfg)
    if cmd == "discriminant":
        check, _ = pres.discriminant_check()
        return _emit_report(_single("discriminant", [check]), cfg)
    if cmd == "export relations":
        v = parse_rational(args.v) if args.v is not None else None
        if args.set.upper() == "CM3" and v is None:
            raise ValueError("--v is required for CM3")
        rs = relations(args.set, v)
        if cfg.format == "json":
            _emit(json.dumps({k: format_polynomial(p) for k, p in rs.polynomials.items()}, indent=2)
                  + "\n", cfg, "json")
        else:
            _emit(rs.to_text(), cfg, "txt")
        return 0
    if cmd == "export table":
        table = default_table()
        if cfg.format == "text":
            _emit(table_text(table), cfg, "txt")
        else:
            data = {f"({i},{j})": format_polynomial(p) for (i, j), p in sorted(table.entries.items())}
            _emit(json.dumps(data, indent=2) + "\n", cfg, "json")
        return 0
    if cmd == "report all":
        return _emit_report(pres.report_all(cfg.trials, cfg.seed, order, complete=not args.no_complete), cfg)
    raise ValueError(f"unknown command {cmd!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all sampling (default 0)")
    common.add_argument("--trials", type=int, default=100, help="number of sample points (default 100)")
    common.add_argument("--n", type=int, default=4, help="matrix size (2, 3 or 4)")
    common.add_argument("--order", default="cm4",
                        help="term order: cm4, natural, or a precedence like 'a14>a13>...'")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help=f"also write the output here (default: ${OUTPUT_DIR_ENV}/<command>)")

    parser = argparse.ArgumentParser(prog="cm4kit", description=__doc__)
    sub = parser.add_subparsers(dest="group", required=True)

    def group(name, actions, help_text, **extra):
        p = sub.add_parser(name, help=help_text)
        s = p.add_subparsers(dest="action", required=True)
        out = {}
        for a in actions:
            out[a] = s.add_parser(a, parents=[common])
        return out

    verify = group("verify", ("cm", "com", "brackets"), "evaluate relations or brackets at points")
    verify["brackets"].add_argument("--points", type=int, default=20)
    group("derive", ("relations",), "derive the CM4 relations from r1 with the bracket table")
    gb = group("groebner", ("check", "complete"), "Groebner basis certification")
    for p in gb.values():
        p.add_argument("--input", help="polynomial file (one per line) instead of the catalogue")
    export = group("export", ("relations", "table"), "export catalogues")
    export["relations"].add_argument("--set", default="CM4", help="/".join(RELATION_SETS))
    export["relations"].add_argument("--v", help="parameter for CM3 (rational, e.g. 1 or 3/2)")
    rep = group("report", ("all",), "run every check")
    rep["all"].add_argument("--no-complete", action="store_true",
                            help="skip Buchberger completion of the 12 generators")
    for name, help_text in (("hilbert", "Hilbert series of I"), ("basis", "free-module basis check"),
                            ("discriminant", "w1 against the discriminant")):
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.group if getattr(args, "action", None) is None else f"{args.group} {args.action}"
    cfg = RunConfig(command, args.seed, args.trials, args.n, args.order, args.format, args.output)
    try:
        if cfg.n not in pres.SUPPORTED_N:
            raise ValueError(f"no relation catalogue for n = {cfg.n} (supported: 2, 3, 4)")
        return run(cfg, args)
    except PolynomialParseError as exc:
        print(f"cm4kit: parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"cm4kit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
