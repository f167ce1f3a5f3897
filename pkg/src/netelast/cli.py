"""Command-line front end.

Subcommands: generate, metrics, attack, elasticity, bound, tradeoff, run.
Exit codes: 2 parse errors, 3 parameter errors, 4 compute errors, 5 io errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ComputeError, ParameterError, ParseError
from .experiment import fmt, load_config, run_experiment
from .generators import FAMILIES, GeneratorSpec
from .graph import METRICS_CSV_HEADER, load_edge_list, metrics, save_edge_list
from .robustness import (
    ATTACK_KINDS,
    AttackStrategy,
    attack_sequence,
    elasticity,
    mesh_elasticity_continuous,
    mesh_elasticity_discrete,
    tradeoff_re,
    TradeoffParams,
)
from .throughput import ThroughputModel

EXIT_PARSE = 2
EXIT_PARAMETER = 3
EXIT_COMPUTE = 4
EXIT_IO = 5


def _add_generator_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("-n", type=int, default=0, help="node count")
    p.add_argument("-p", type=float, default=0.0, help="edge/rewiring probability")
    p.add_argument("-k", type=int, default=0, help="ring-lattice neighbour count")
    p.add_argument("-m", type=int, default=0, help="links per arriving node")
    p.add_argument("--rows", type=int, default=0)
    p.add_argument("--cols", type=int, default=0)
    p.add_argument("--diagonals", action="store_true")
    p.add_argument("--seed", type=int, default=0)


def _spec_from_args(args) -> GeneratorSpec:
    return GeneratorSpec(
        family=args.family,
        n=args.n,
        p=args.p,
        k=args.k,
        m=args.m,
        rows=args.rows,
        cols=args.cols,
        diagonals=args.diagonals,
        seed=args.seed,
    )


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", type=Path, required=True, help="edge-list file")


def _add_model_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--model",
        default="dijkstra_homogeneous",
        choices=("dijkstra_homogeneous", "dijkstra_heterogeneous", "lp_optimization"),
    )
    p.add_argument("--tie-break", default="sequential", choices=("sequential", "random"))
    p.add_argument("--tie-seed", type=int, default=None)


def _add_attack_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--attack", required=True, choices=ATTACK_KINDS)
    p.add_argument("--seed", type=int, default=None, help="random-attack seed")
    p.add_argument("--batch", type=int, default=1)
    p.add_argument("--static", action="store_true", help="rank once on the intact graph")


def _strategy_from_args(args) -> AttackStrategy:
    return AttackStrategy(
        kind=args.attack,
        seed=args.seed,
        recompute=not args.static,
        batch=args.batch,
    )


def _model_from_args(args) -> ThroughputModel:
    return ThroughputModel(kind=args.model, tie_break=args.tie_break, seed=args.tie_seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netelast",
        description="Throughput elasticity of network topologies under node-removal attacks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write an edge list from generator parameters")
    _add_generator_args(p)
    p.add_argument("--out", type=Path, default=None, help="output file (default stdout)")

    p = sub.add_parser("metrics", help="print the metric suite of an edge list")
    _add_input_args(p)
    p.add_argument("--name", default="graph", help="row label")

    p = sub.add_parser("attack", help="print the removal order under an attack strategy")
    _add_input_args(p)
    _add_attack_args(p)

    p = sub.add_parser("elasticity", help="run one attack cell and print the curve")
    _add_input_args(p)
    _add_attack_args(p)
    _add_model_args(p)
    p.add_argument("--stop-fraction", type=float, default=1.0)
    p.add_argument("--out", type=Path, default=None, help="curve CSV (default stdout)")

    p = sub.add_parser("bound", help="analytic mesh elasticity bounds")
    p.add_argument("--n", required=True, help="mesh size (scientific notation accepted)")
    p.add_argument("--mode", required=True, choices=("discrete", "continuous"))
    p.add_argument("--zeta", type=int, default=None, help="nodes removed (default: all)")

    p = sub.add_parser("tradeoff", help="evaluate the elasticity/cost tradeoff score")
    p.add_argument("--a", type=float, required=True, help="elasticity under random attack")
    p.add_argument("--b", type=float, required=True, help="elasticity under degree attack")
    p.add_argument("--c", type=float, required=True, help="elasticity under betweenness attack")
    p.add_argument("--n", type=int, required=True, help="node count")
    p.add_argument("--m", type=int, required=True, help="link count")
    p.add_argument("--alpha-tol", type=float, default=1.0)
    p.add_argument("--beta-tol", type=float, default=1.0)
    p.add_argument("--delta-tol", type=float, default=1.0)
    p.add_argument("--gamma-tol", type=float, default=1.0)

    p = sub.add_parser("run", help="execute an experiment config file")
    p.add_argument("--config", type=Path, required=True)

    return parser


def _cmd_generate(args) -> int:
    g = _spec_from_args(args).build()
    if args.out is None:
        save_edge_list(g, sys.stdout)
    else:
        save_edge_list(g, args.out)
    return 0


def _cmd_metrics(args) -> int:
    g = load_edge_list(args.input)
    rep = metrics(g)
    print(METRICS_CSV_HEADER)
    print(rep.csv_row(args.name))
    return 0


def _cmd_attack(args) -> int:
    g = load_edge_list(args.input)
    for v in attack_sequence(g, _strategy_from_args(args)):
        print(v)
    return 0


def _cmd_elasticity(args) -> int:
    g = load_edge_list(args.input)
    curve = elasticity(g, _strategy_from_args(args), _model_from_args(args), args.stop_fraction)
    if args.out is None:
        curve.write_csv(sys.stdout)
    else:
        curve.write_csv(args.out)
    return 0


def _cmd_bound(args) -> int:
    try:
        n = int(float(args.n))
    except ValueError:
        raise ParameterError(f"--n must be a number, got {args.n!r}") from None
    if args.mode == "discrete":
        zeta = n if args.zeta is None else args.zeta
        value = mesh_elasticity_discrete(n, zeta)
    else:
        value = mesh_elasticity_continuous(n, "all" if args.zeta is None else args.zeta)
    print(fmt(value))
    return 0


def _cmd_tradeoff(args) -> int:
    params = TradeoffParams(
        alpha_tol=args.alpha_tol,
        beta_tol=args.beta_tol,
        delta_tol=args.delta_tol,
        gamma_tol=args.gamma_tol,
    )
    print(fmt(tradeoff_re(args.a, args.b, args.c, args.n, args.m, params)))
    return 0


def _cmd_run(args) -> int:
    config = load_config(args.config)
    report = run_experiment(config)
    print(f"wrote {report.output_dir}")
    for key, msg in report.errors.items():
        print(f"error {key}: {msg}", file=sys.stderr)
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "metrics": _cmd_metrics,
    "attack": _cmd_attack,
    "elasticity": _cmd_elasticity,
    "bound": _cmd_bound,
    "tradeoff": _cmd_tradeoff,
    "run": _cmd_run,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"netelast: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParameterError as exc:
        print(f"netelast: parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except ComputeError as exc:
        print(f"netelast: compute error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"netelast: io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
