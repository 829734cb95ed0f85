"""
Command-line entry point `hyperdisc`.

Subcommands:
  ipm                 IPM of two distributions under a class
  gvc                 graph VC dimension of a class
  discriminate        ERM discriminator on two samples (or sampled distributions)
  test-closeness      closeness tester with fresh holdouts
  grid-sweep          lifted IPM over the mixture grid against the lemma floor
  construct           collision | subset-graph | subset-hypergraph | disjoint-pair | hard-pair
  vandermonde-check   spectrum, determinant and grid-dominance checks
  uc-experiment       uniform convergence rows against the bound
  sensitivity         one-draw replacement against 2k/m
  expressivity        full separation pipeline

Exit status: 0 when every checked inequality holds, 1 when one fails, 2 on bad input.
"""

import argparse
import logging
import sys

from .capacity_feature.vc import graph_vc_dim
from .config import get_settings
from .discrimination_feature.erm import erm_discriminate
from .discrimination_feature.tester import closeness_test, holdout_sample_size
from .errors import DiscriminatorError
from .experiments_feature.experiments import (
    ADVERSARIES,
    expressivity_experiment,
    sensitivity_experiment,
    uc_experiment,
)
from .experiments_feature.reports import (
    EXPRESSIVITY_COLUMNS,
    SENSITIVITY_COLUMNS,
    UC_COLUMNS,
    render_json,
    write_report,
)
from .instance_io import InstanceFileHandler, load_pair
from .metrics_feature.ipm import ipm_exact
from .metrics_feature.lift import mixture_grid_sweep
from .services import CONSTRUCT_MODES, construct_payload, draw_pair, vandermonde_payload

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _emit(payload, out) -> None:
    text = render_json(payload)
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _m_grid(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_ipm(args) -> int:
    c = InstanceFileHandler(args.class_file).load_class()
    p1, p2 = load_pair(args.p1, args.p2)
    _emit(ipm_exact(c, p1, p2).to_dict(), args.out)
    return EXIT_OK


def cmd_gvc(args) -> int:
    c = InstanceFileHandler(args.class_file).load_class()
    _emit(graph_vc_dim(c).to_dict(), args.out)
    return EXIT_OK


def _samples(args, c):
    """Training samples from files, or drawn from distribution files with --m/--seed."""
    if args.s1 and args.s2:
        s1 = InstanceFileHandler(args.s1).load_sample(c.universe)
        s2 = InstanceFileHandler(args.s2).load_sample(c.universe)
        return s1, s2, None, None
    if not (args.p1 and args.p2 and args.m):
        raise ValueError("give --s1/--s2, or --p1/--p2 together with --m")
    p1, p2 = load_pair(args.p1, args.p2)
    s1, s2 = draw_pair(p1, p2, args.m, args.seed)
    return s1, s2, p1, p2


def cmd_discriminate(args) -> int:
    c = InstanceFileHandler(args.class_file).load_class()
    s1, s2, p1, p2 = _samples(args, c)
    _emit(erm_discriminate(c, s1, s2, p1, p2).to_dict(), args.out)
    return EXIT_OK


def cmd_test_closeness(args) -> int:
    c = InstanceFileHandler(args.class_file).load_class()
    if args.h1 and args.h2:
        if not (args.s1 and args.s2):
            raise ValueError("holdout files need --s1 and --s2 as well")
        s1 = InstanceFileHandler(args.s1).load_sample(c.universe)
        s2 = InstanceFileHandler(args.s2).load_sample(c.universe)
        h1 = InstanceFileHandler(args.h1).load_sample(c.universe)
        h2 = InstanceFileHandler(args.h2).load_sample(c.universe)
    else:
        if not (args.p1 and args.p2 and args.m):
            raise ValueError("give --s1/--s2/--h1/--h2, or --p1/--p2 together with --m")
        p1, p2 = load_pair(args.p1, args.p2)
        holdout_m = holdout_sample_size(c.arity, args.epsilon, args.delta)
        s1, s2 = draw_pair(p1, p2, args.m, args.seed)
        h1, h2 = draw_pair(p1, p2, holdout_m, args.seed + 1)
    verdict = closeness_test(c, s1, s2, h1, h2, args.epsilon)
    _emit(verdict.to_dict(), args.out)
    return EXIT_OK


def cmd_grid_sweep(args) -> int:
    c = InstanceFileHandler(args.class_file).load_class()
    p1, p2 = load_pair(args.p1, args.p2)
    sweep = mixture_grid_sweep(c, args.vertex, p1, p2)
    _emit(sweep.to_dict(), args.out)
    return EXIT_OK if sweep.holds else EXIT_VIOLATION


def cmd_construct(args) -> int:
    payload = construct_payload(
        args.mode, args.ell, args.k, args.epsilon, args.seed, args.method, args.adversary, args.n
    )
    _emit(payload, args.out)
    return EXIT_OK


def cmd_vandermonde(args) -> int:
    payload, holds = vandermonde_payload(args.k, args.trials, args.seed)
    _emit(payload, args.out)
    return EXIT_OK if holds else EXIT_VIOLATION


def cmd_uc(args) -> int:
    c = InstanceFileHandler(args.class_file).load_class()
    p = InstanceFileHandler(args.dist).load_distribution(c.universe)
    rows = uc_experiment(c, p, _m_grid(args.m_grid), args.replicates, args.seed, args.rho)
    _write_rows(rows, UC_COLUMNS, args.out)
    return EXIT_OK if all(r.holds for r in rows) else EXIT_VIOLATION


def cmd_sensitivity(args) -> int:
    c = InstanceFileHandler(args.class_file).load_class()
    p = InstanceFileHandler(args.dist).load_distribution(c.universe)
    rows = [sensitivity_experiment(c, p, m, args.trials, args.seed) for m in _m_grid(args.m)]
    _write_rows(rows, SENSITIVITY_COLUMNS, args.out)
    return EXIT_OK if all(r.holds for r in rows) else EXIT_VIOLATION


def cmd_expressivity(args) -> int:
    report = expressivity_experiment(
        args.ell, args.k, args.epsilon, args.method, args.seed, args.adversary, args.rounds
    )
    _write_rows([report], EXPRESSIVITY_COLUMNS, args.out)
    return EXIT_OK if report.holds else EXIT_VIOLATION


def _write_rows(rows, columns, out) -> None:
    text = write_report(rows, columns, out)
    if out is None:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperdisc", description=__doc__.splitlines()[1])
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", default=None, help="output file (.json or .csv); stdout when omitted")
        p.set_defaults(func=func)
        return p

    p = add("ipm", cmd_ipm, "IPM of two distributions under a class")
    p.add_argument("--class", dest="class_file", required=True)
    p.add_argument("--p1", required=True)
    p.add_argument("--p2", required=True)

    p = add("gvc", cmd_gvc, "graph VC dimension of a class")
    p.add_argument("--class", dest="class_file", required=True)

    for name, func, help_text in (
        ("discriminate", cmd_discriminate, "ERM discriminator"),
        ("test-closeness", cmd_test_closeness, "closeness tester"),
    ):
        p = add(name, func, help_text)
        p.add_argument("--class", dest="class_file", required=True)
        p.add_argument("--s1")
        p.add_argument("--s2")
        p.add_argument("--p1")
        p.add_argument("--p2")
        p.add_argument("--m", type=int)
        p.add_argument("--seed", type=int, default=0)
        if name == "test-closeness":
            p.add_argument("--h1")
            p.add_argument("--h2")
            p.add_argument("--epsilon", type=float, required=True)
            p.add_argument("--delta", type=float, default=0.1)

    p = add("grid-sweep", cmd_grid_sweep, "lifted IPM over the mixture grid")
    p.add_argument("--class", dest="class_file", required=True)
    p.add_argument("--p1", required=True)
    p.add_argument("--p2", required=True)
    p.add_argument("--vertex", type=int, required=True)

    p = add("construct", cmd_construct, "build a separating instance")
    p.add_argument("mode", choices=CONSTRUCT_MODES)
    p.add_argument("--ell", type=int, default=4)
    p.add_argument("--n", type=int, default=None, help="universe size for the collision graph")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--epsilon", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=["sampling", "game"], default="game")
    p.add_argument("--adversary", choices=sorted(ADVERSARIES), default="singletons")

    p = add("vandermonde-check", cmd_vandermonde, "Vandermonde spectrum and grid checks")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    p = add("uc-experiment", cmd_uc, "uniform convergence rows")
    p.add_argument("--class", dest="class_file", required=True)
    p.add_argument("--dist", required=True)
    p.add_argument("--m-grid", default="50,100,200,400,800")
    p.add_argument("--replicates", type=int, default=None)
    p.add_argument("--rho", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = add("sensitivity", cmd_sensitivity, "bounded-difference check")
    p.add_argument("--class", dest="class_file", required=True)
    p.add_argument("--dist", required=True)
    p.add_argument("--m", default="10", help="one size or a comma-separated list")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    p = add("expressivity", cmd_expressivity, "separation pipeline")
    p.add_argument("--ell", type=int, default=12)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--epsilon", type=float, default=0.2)
    p.add_argument("--method", choices=["sampling", "game"], default="game")
    p.add_argument("--adversary", choices=sorted(ADVERSARIES), default="singletons")
    p.add_argument("--rounds", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    return parser


def configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, get_settings().log_level, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        configure_logging(args.verbose)
        status = args.func(args)
    except (DiscriminatorError, ValueError, FileNotFoundError, KeyError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    if status == EXIT_VIOLATION:
        logger.warning("%s: a checked inequality failed", args.command)
    return status


if __name__ == "__main__":
    sys.exit(main())
