"""Command-line front end.

Exit codes:

    0  success (cleaned / continually cleanable / verified / found)
    1  usage or input error
    2  negative outcome (stalled run, failing orbit, failed verification,
       search budget exhausted)
    3  orbit inconclusive within --max-rounds
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from . import bounds as bnd
from .constructions import (
    CliqueChain,
    ConstructionError,
    build_chain,
    decompose,
    format_configs,
    parse_configs,
    theorem_config,
)
from .engine import as_config, clean
from .graph import Graph, GraphError, make_clique, make_cycle, parse_graph
from .orbit import Verdict, clique_orbit, is_one_clique_config, orbit_analyze
from .search import SearchBudgetExhausted, exact_brush_number, exact_cpb_clique

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_graph(spec: str) -> Graph:
    m = re.fullmatch(r"([kc])(\d+)", spec.lower())
    try:
        if m:
            n = int(m.group(2))
            return make_clique(n) if m.group(1) == "k" else make_cycle(n)
        path = Path(spec)
        if not path.is_file():
            raise UsageError(f"--graph: {spec!r} is neither kN, cN nor a readable file")
        return parse_graph(path.read_text())
    except GraphError as exc:
        raise UsageError(f"--graph: {exc}") from None


def _load_config(spec: str, n: int) -> tuple[int, ...]:
    path = Path(spec)
    try:
        if path.is_file():
            configs = parse_configs(path.read_text())
            if not configs:
                raise UsageError(f"--config: {spec} holds no configuration")
            config = configs[0]
        else:
            config = as_config(int(tok) for tok in spec.replace(",", " ").split())
    except (ValueError, ConstructionError) as exc:
        raise UsageError(f"--config: {exc}") from None
    if len(config) != n:
        raise UsageError(f"--config: {len(config)} entries for a graph on {n} vertices")
    return config


def _positive(flag: str, value: int) -> int:
    if value < 1:
        raise UsageError(f"{flag}: must be positive, got {value}")
    return value


def cmd_simulate(args, out) -> int:
    G = _load_graph(args.graph)
    config = _load_config(args.config, G.n)
    trace = clean(G, config, model=args.model, mode=args.trace)
    out.write(trace.to_json() + "\n" if args.format == "json" else trace.to_text())
    return EXIT_OK if trace.cleaned else EXIT_NEGATIVE


def cmd_orbit(args, out) -> int:
    _positive("--max-rounds", args.max_rounds)
    if args.clique is not None:
        n = _positive("--clique", args.clique)
        report = clique_orbit(n, _load_config(args.config, n), args.max_rounds)
    else:
        G = _load_graph(args.graph)
        report = orbit_analyze(G, _load_config(args.config, G.n), args.max_rounds)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(f"verdict {report.describe()}\nrounds {report.rounds}\n")
        if report.cycle_start is not None:
            out.write(f"cycle_start {report.cycle_start} length {report.cycle_length}\n")
        for s, c in enumerate(report.round_configs):
            out.write(f"round {s} " + " ".join(map(str, c)) + "\n")
    return {
        Verdict.CONTINUAL: EXIT_OK,
        Verdict.FAILS: EXIT_NEGATIVE,
        Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[report.verdict]


def cmd_construct(args, out) -> int:
    if args.theorem_k is not None:
        if args.theorem_k < 0:
            raise UsageError(f"--theorem-k: must be non-negative, got {args.theorem_k}")
        out.write(format_configs([theorem_config(args.theorem_k)]))
        return EXIT_OK
    chain = decompose(_positive("--n", args.n))
    if args.emit in ("chain", "both"):
        out.write(chain.to_json() + "\n")
    if args.emit in ("config", "both"):
        out.write(format_configs([build_chain(chain).configs[-1]]))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    n = _positive("--clique", args.clique)
    report = is_one_clique_config(n, _load_config(args.config, n), strict=args.strict_cap)
    out.write(json.dumps(report.to_dict(), sort_keys=True) + "\n" if args.format == "json" else report.to_text())
    return EXIT_OK if report.verdict else EXIT_NEGATIVE


def cmd_bounds(args, out) -> int:
    if args.b is not None:
        out.write(f"{bnd.brush_number_clique(_positive('--b', args.b))}\n")
        return EXIT_OK
    try:
        chain = CliqueChain.parse(args.chain)
        if chain.n0 not in (1, 2, 3):
            raise ConstructionError(f"base order must be 1, 2 or 3, got {chain.n0}")
    except ConstructionError as exc:
        raise UsageError(f"--chain: {exc}") from None
    rows = bnd.ratio_table(chain, intro_variant=args.intro_variant)
    if args.csv:
        out.write(bnd.rows_to_csv(rows))
        return EXIT_OK
    summary = bnd.summarize(rows)
    for r in rows:
        out.write(
            f"i {r.i} n {r.n} b {r.b} S {r.S} S/n^2 {bnd.to_decimal(r.s_ratio)} "
            f"envelope {bnd.to_decimal(r.envelope_coeff)} b/S {bnd.to_decimal(r.b_over_s)}\n"
        )
    first = summary.first_above_conjecture
    out.write(f"first level with b/S > 9/16: {'none' if first is None else first}\n")
    out.write(f"|S/n^2 - 3/7| at last level: {bnd.to_decimal(summary.last_s_ratio_gap)}\n")
    out.write(f"|b/S - 7/12| at last level: {bnd.to_decimal(summary.last_b_over_s_gap)}\n")
    return EXIT_OK


def cmd_search(args, out) -> int:
    n = _positive("--clique", args.clique)
    if args.cap < 0:
        raise UsageError(f"--cap: must be non-negative, got {args.cap}")
    try:
        if args.target == "b":
            result = exact_brush_number(make_clique(n), args.model, args.cap)
        else:
            result = exact_cpb_clique(n, args.cap)
    except SearchBudgetExhausted as exc:
        out.write(json.dumps({"error": "budget-exhausted", "detail": str(exc)}, sort_keys=True) + "\n")
        return EXIT_NEGATIVE
    out.write(result.to_json() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="brushclean", description="Brush cleaning simulator and clique constructions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("simulate", help="run one cleaning process")
    s.add_argument("--graph", required=True, help="kN, cN or an edge-list file")
    s.add_argument("--config", required=True, help="inline counts or a configuration file")
    s.add_argument("--model", choices=("parallel", "sequential"), default="parallel")
    s.add_argument("--trace", choices=("full", "summary"), default="full")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_simulate)

    o = sub.add_parser("orbit", help="decide continual parallel cleanability")
    g = o.add_mutually_exclusive_group(required=True)
    g.add_argument("--clique", type=int)
    g.add_argument("--graph")
    o.add_argument("--config", required=True)
    o.add_argument("--max-rounds", type=int, default=1000)
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.set_defaults(func=cmd_orbit)

    c = sub.add_parser("construct", help="build a 1-clique configuration")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--theorem-k", type=int)
    c.add_argument("--emit", choices=("config", "chain", "both"), default="config")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check the 1-clique conditions")
    v.add_argument("--clique", type=int, required=True)
    v.add_argument("--config", required=True)
    v.add_argument("--strict-cap", action="store_true", help="also require the cap at every step")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="chain costs against the envelope")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--chain", help="n0,d1,d2,...")
    g.add_argument("--b", type=int, help="print floor(N^2/4)")
    b.add_argument("--csv", action="store_true")
    b.add_argument("--intro-variant", action="store_true", help="use exponent i+1 in the envelope")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("search", help="exhaustive minimum brush totals")
    r.add_argument("--target", choices=("b", "cpb"), required=True)
    r.add_argument("--clique", type=int, required=True)
    r.add_argument("--cap", type=int, required=True, help="largest total to try")
    r.add_argument("--model", choices=("parallel", "sequential"), default="parallel")
    r.set_defaults(func=cmd_search)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"brushclean {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
