"""
Command-line front end: ``plc iterate | resume | oracle | render | verify``.

Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 theorem or bound violation, 5 snapshot or I/O failure.
"""
import argparse
import logging
import os
import sys
import typing
from fractions import Fraction

import numpy as np

from plc.bounds import TheoremViolation
from plc.bounds.report import build_bounds_report
from plc.bounds.stage_bounds import check_stage_bounds, check_single_stage, two_line_cover_free
from plc.engine import BudgetExceeded, EngineError, InvalidStart
from plc.engine.closure import init, run_stage, degrees
from plc.engine.configuration import Configuration, ParallelPolicy, StageStats
from plc.geom.start import validate_start
from plc.oracles import DegenerateGrid, IncidenceBoundViolation
from plc.oracles.grid import arithmetic_grid_spec, random_grid_spec, grid_cover_min
from plc.oracles.incidence_bound import DEFAULT_INCIDENCE_CONSTANT, incidence_bound_report
from plc.oracles.sumset import SumsetInstance, sumset_size
from plc.scripts.config import RunConfig, parse_start, resolve_run_config
from plc.scripts.export import write_stats_csv, write_bounds_json
from plc.snapshot import SnapshotError
from plc.snapshot.reader import load_snapshot
from plc.snapshot.snapshot_generator import SnapshotGenerator
from plc.svg import EmptyViewport
from plc.svg.svg_generator import Viewport, SVGGenerator
from plc.utils.math import nchoosek
from plc.utils.plotting import plot_growth


__all__ = [
    "EXIT_OK",
    "EXIT_INVALID_INPUT",
    "EXIT_BUDGET",
    "EXIT_THEOREM",
    "EXIT_IO",
    "build_parser",
    "main"
]


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_BUDGET = 3
EXIT_THEOREM = 4
EXIT_IO = 5

# checked in order, so subclasses come before their bases
_EXIT_CODES = [
    (BudgetExceeded, EXIT_BUDGET),
    (TheoremViolation, EXIT_THEOREM),
    (IncidenceBoundViolation, EXIT_THEOREM),
    (SnapshotError, EXIT_IO),
    (OSError, EXIT_IO),
    (InvalidStart, EXIT_INVALID_INPUT),
    (DegenerateGrid, EXIT_INVALID_INPUT),
    (EmptyViewport, EXIT_INVALID_INPUT),
    (EngineError, EXIT_INVALID_INPUT),
    (ValueError, EXIT_INVALID_INPUT)
]


def _rational_list(text: str) -> typing.List[Fraction]:
    return [Fraction(v.strip()) for v in text.split(",") if v.strip()]


def _run_overrides(args: argparse.Namespace) -> dict:
    return dict(
        start=parse_start(args.start) if getattr(args, "start", None) else None,
        max_stage=args.max_stage, max_points=args.max_points, max_lines=args.max_lines, max_bits=args.max_bits,
        policy=ParallelPolicy(args.policy) if args.policy else None, workers=args.workers,
        output_dir=args.output_dir, stats_csv=args.stats_csv, bounds_json=args.bounds_json,
        growth_plot=args.growth_plot, omit_timings=args.omit_timings or None
    )


def _write_outputs(cfg: RunConfig, stats: typing.List[StageStats], configurations: typing.List[Configuration],
                   strict: bool):
    write_stats_csv(stats, cfg.output_path(cfg.stats_csv), cfg.omit_timings)
    report = build_bounds_report(stats, configurations, strict=strict)
    write_bounds_json(report, cfg.output_path(cfg.bounds_json))
    if cfg.growth_plot:
        plot_growth([s.k for s in stats], [s.n for s in stats], cfg.output_path(cfg.growth_plot))


def _bounds_apply(c: Configuration) -> bool:
    """
    The stage bounds hold for starts in general position. For any other start accepted under an explicit policy,
    failed bounds are logged and recorded in the report instead of stopping the run.
    """
    violations = [] if c.start is None else validate_start(c.start)
    for v in violations:
        logger.warning(f"Start is not in general position ({v.detail}); stage bounds are reported, not enforced")
    return not violations


def _iterate_from(c: Configuration, cfg: RunConfig) -> int:
    """Runs stages from ``c`` up to ``cfg.max_stage``, writing one snapshot per stage"""
    os.makedirs(cfg.output_dir, exist_ok=True)
    strict = _bounds_apply(c)
    stats = [degrees(c)]
    configurations = [c]
    check_single_stage(stats[0], strict)
    SnapshotGenerator(c).generate(cfg.snapshot_path(c.k))
    print(f"stage {c.k}: n={c.n} m={c.m} delta={stats[0].delta}")
    status = EXIT_OK
    while c.k < cfg.max_stage:
        try:
            c, s = run_stage(c, cfg.policy, cfg.budget(), cfg.workers)
        except BudgetExceeded as e:
            logger.error(f"Stopping before stage {c.k + 1}: {e}. The stage {c.k} snapshot can be resumed.")
            status = EXIT_BUDGET
            break
        check_stage_bounds(stats[-1], s, strict)
        stats.append(s)
        configurations.append(c)
        SnapshotGenerator(c).generate(cfg.snapshot_path(c.k))
        print(f"stage {c.k}: n={c.n} m={c.m} delta={s.delta}")
    _write_outputs(cfg, stats, configurations, strict)
    return status


def cmd_iterate(args: argparse.Namespace) -> int:
    cfg = resolve_run_config(args.config, **_run_overrides(args))
    c = init(cfg.start, cfg.policy)
    logger.info(f"Starting from {cfg.start} with policy '{c.policy.value}' up to stage {cfg.max_stage}")
    return _iterate_from(c, cfg)


def cmd_resume(args: argparse.Namespace) -> int:
    overrides = _run_overrides(args)
    c = load_snapshot(args.snapshot)
    if overrides["policy"] is None:
        overrides["policy"] = c.policy
    if c.start is not None:
        overrides["start"] = c.start
    cfg = resolve_run_config(args.config, **overrides)
    return _iterate_from(c, cfg)


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.oracle == "grid-cover":
        if args.spacing == "arithmetic":
            g = arithmetic_grid_spec(args.n)
        else:
            g = random_grid_spec(2, args.n, np.random.default_rng(args.seed))
        value = grid_cover_min(g)
        print(value)
        print(f"{args.n}x{args.n} {args.spacing} grid: {value} parallel lines cover the intersections "
              f"(2n - 1 = {2 * args.n - 1})", file=sys.stderr)
    elif args.oracle == "sumset":
        inst = SumsetInstance(tuple(_rational_list(args.a)), tuple(_rational_list(args.b)))
        value = sumset_size(inst)
        print(value)
        print(f"|A| = {len(inst.A)}, |B| = {len(inst.B)}, |A+B| = {value} "
              f"(lower bound {len(inst.A) + len(inst.B) - 1})", file=sys.stderr)
    elif args.oracle == "incidence":
        rng = np.random.default_rng(args.seed)
        samples = [random_grid_spec(args.families, args.lines, rng) for _ in range(args.samples)]
        report = incidence_bound_report(samples, Fraction(args.c), args.range_reading)
        print(report.samples[0].points if args.samples == 1 else report.min_ratio)
        for s in report.samples:
            print(f"sample {s.index}: N={s.N} k={s.k} |P|={s.points} ratio={s.ratio:.6f} (c = {report.c})",
                  file=sys.stderr)
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    c = load_snapshot(args.snapshot)
    generator = SVGGenerator(c, Viewport.from_string(args.viewport), width=args.width)
    generator.generate(args.output)
    print(args.output)
    print(f"{generator.n_circles} circle(s), {generator.n_segments} segment(s)", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Reloads a snapshot (checksum, version and incidence rebuild) and re-checks the single-stage bounds"""
    c = load_snapshot(args.snapshot)
    s = degrees(c)
    strict = _bounds_apply(c)
    check_single_stage(s, strict)
    if c.m > nchoosek(c.n, 2):
        raise TheoremViolation("lines_from_points", c.k, f"m_k = {c.m} exceeds C({c.n}, 2)")
    if strict and c.k >= 2 and not two_line_cover_free(c):
        raise TheoremViolation("two_line_cover", c.k, "two lines contain every point")
    print("ok")
    print(f"stage {c.k}: n={c.n} m={c.m} delta={s.delta} Delta={s.Delta} deltabar={s.deltabar} "
          f"Deltabar={s.Deltabar}", file=sys.stderr)
    return EXIT_OK


def _add_run_arguments(parser: argparse.ArgumentParser, with_start: bool):
    parser.add_argument("--config", help="Key-value run configuration file")
    if with_start:
        parser.add_argument("--start", help="Four start points, e.g. '0,0; 1,0; 0,1; 5,7'")
    parser.add_argument("--max-stage", type=int)
    parser.add_argument("--max-points", type=int)
    parser.add_argument("--max-lines", type=int)
    parser.add_argument("--max-bits", type=int)
    parser.add_argument("--policy", choices=[p.value for p in ParallelPolicy])
    parser.add_argument("--workers", type=int)
    parser.add_argument("--output-dir")
    parser.add_argument("--stats-csv")
    parser.add_argument("--bounds-json")
    parser.add_argument("--growth-plot", help="Save a figure of log4 log4 n_k per stage")
    parser.add_argument("--omit-timings", action="store_true", help="Leave the timing columns blank")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plc", description="Exact point-line closure engine and bound checks")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    iterate = sub.add_parser("iterate", help="Run stages from a start configuration")
    _add_run_arguments(iterate, with_start=True)
    iterate.set_defaults(func=cmd_iterate)

    resume = sub.add_parser("resume", help="Continue from a snapshot")
    resume.add_argument("snapshot")
    _add_run_arguments(resume, with_start=False)
    resume.set_defaults(func=cmd_resume)

    oracle = sub.add_parser("oracle", help="Brute-force oracles")
    oracle_sub = oracle.add_subparsers(dest="oracle", required=True)
    grid_cover = oracle_sub.add_parser("grid-cover")
    grid_cover.add_argument("--n", type=int, required=True)
    grid_cover.add_argument("--spacing", choices=["arithmetic", "random"], default="arithmetic")
    grid_cover.add_argument("--seed", type=int, default=0)
    sumset = oracle_sub.add_parser("sumset")
    sumset.add_argument("--a", required=True, help="Comma-separated rationals")
    sumset.add_argument("--b", required=True, help="Comma-separated rationals")
    incidence = oracle_sub.add_parser("incidence")
    incidence.add_argument("--families", type=int, required=True)
    incidence.add_argument("--lines", type=int, required=True)
    incidence.add_argument("--seed", type=int, default=0)
    incidence.add_argument("--samples", type=int, default=1)
    incidence.add_argument("--c", default=str(DEFAULT_INCIDENCE_CONSTANT))
    incidence.add_argument("--range-reading", choices=["N", "k"], default="N")
    oracle.set_defaults(func=cmd_oracle)

    render = sub.add_parser("render", help="Draw a snapshot as SVG")
    render.add_argument("snapshot")
    render.add_argument("--viewport", required=True,
                        help="x_min,x_max,y_min,y_max; write --viewport=-1,3,-1,8 when a bound is negative")
    render.add_argument("--output", required=True)
    render.add_argument("--width", type=int, default=600)
    render.set_defaults(func=cmd_render)

    verify = sub.add_parser("verify", help="Re-check a snapshot")
    verify.add_argument("snapshot")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: typing.List[str] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except Exception as e:
        for exc_type, code in _EXIT_CODES:
            if isinstance(e, exc_type):
                logger.error(f"{type(e).__name__}: {e}")
                return code
        raise


if __name__ == "__main__":
    sys.exit(main())
