"""
The ``abelzeta`` command line interface.
"""
import argparse
import json
import logging
import os
import sys

import pandas

from abelzeta.attributes import UNDEFINED
from abelzeta.funcfield import parse_cover_spec
from abelzeta.lab import (
    SweepPlan,
    analyze,
    irreducible_count_table,
    places_report,
    plot_ratio_convergence,
    run_oracle,
    run_sweep,
)
from abelzeta.options import EngineOptions, set_default_options
from abelzeta.utils import get_data_filename, setup_timestamp_logging
from abelzeta.utils.exceptions import AbelZetaError

logger = logging.getLogger(__name__)


def _write_json(value, stream):
    stream.write(json.dumps(value, sort_keys=True, indent=2, separators=(",", ": ")))
    stream.write("\n")


def _write_csv(data_frame, stream):
    stream.write(data_frame.to_csv(index=False))


def _parse_corruption(values):
    """Parses ``D=OFFSET`` fault injection arguments."""
    corrupt = {}

    for value in values or []:

        degree, _, offset = value.partition("=")

        try:
            corrupt[int(degree)] = int(offset)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{value} is not of the form D=OFFSET.")

    return corrupt


def _analyze(arguments, stream):

    spec = parse_cover_spec(arguments.spec, arguments.budget)
    analysis = analyze(spec, budget=arguments.budget)

    if arguments.format == "csv":
        _write_csv(pandas.DataFrame([analysis.bounds.to_row()]), stream)
    else:
        _write_json(analysis.to_dict(), stream)

    return 0


def _lpoly(arguments, stream):

    spec = parse_cover_spec(arguments.spec, arguments.budget)
    analysis = analyze(spec, budget=arguments.budget)

    _write_json(analysis.zeta.lpoly.to_dict(), stream)
    return 0


def _places(arguments, stream):

    spec = parse_cover_spec(arguments.spec, arguments.budget)
    spec.validate()

    report = places_report(
        spec, arguments.bound, arguments.splitting_bound, arguments.budget
    )
    _write_json(report, stream)

    return 0


def _plan_value(plan, name):
    value = getattr(plan, name)
    return None if value == UNDEFINED else value


def _plan_path(plan):
    """Resolves a plan argument, which is either a file or the name of a
    plan shipped in ``abelzeta/data/plans``."""
    if os.path.isfile(plan):
        return plan

    name = plan if plan.endswith(".json") else f"{plan}.json"
    return get_data_filename(os.path.join("plans", name))


def _sweep(arguments, stream):

    plan = SweepPlan.from_json(_plan_path(arguments.plan))

    if arguments.budget is not None:
        plan.budget = arguments.budget

    result = run_sweep(plan, arguments.threads)

    csv_path = arguments.csv_path or _plan_value(plan, "csv_path")
    json_path = arguments.json_path or _plan_value(plan, "json_path")
    svg_path = arguments.svg or _plan_value(plan, "svg_path")

    if csv_path is not None:
        result.to_csv(csv_path)
    if json_path is not None:
        result.summary_json(json_path)
    if svg_path is not None:
        plot_ratio_convergence(result, svg_path, arguments.svg_date)

    if arguments.format == "csv":
        stream.write(result.to_csv())
    else:
        _write_json(result.summary(), stream)

    return 0


def _oracle(arguments, stream):

    result = run_oracle(
        arguments.seed,
        arguments.count,
        arguments.max_genus,
        budget=arguments.budget,
        corrupt=_parse_corruption(arguments.corrupt),
        number_of_threads=arguments.threads,
        specs=None if arguments.replay is None else [arguments.replay],
    )

    _write_json(result.to_dict(), stream)

    for failure in result.failures():
        logger.error(f"{failure.spec} failed; replay with: {failure.replay}")

    return 0 if result.passed else 1


def _irreducible_count(arguments, stream):

    table = irreducible_count_table(arguments.q, arguments.m, arguments.budget)

    if arguments.format == "csv":
        _write_csv(table, stream)
    else:
        _write_json(table.to_dict(orient="records"), stream)

    return 0


def build_parser():
    """argparse.ArgumentParser: The parser of every sub-command."""

    parser = argparse.ArgumentParser(
        prog="abelzeta",
        description="Zeta functions, class numbers and bounds of Kummer and "
        "Artin-Schreier covers of F_q(x).",
    )

    parser.add_argument("--threads", type=int, default=1, help="worker threads")
    parser.add_argument(
        "--budget", type=int, default=None, help="the largest field enumerated"
    )
    parser.add_argument(
        "--precision-digits",
        type=int,
        default=None,
        help="significant digits of real valued quantities",
    )

    output = parser.add_mutually_exclusive_group()
    output.add_argument(
        "--json", dest="format", action="store_const", const="json", default="json"
    )
    output.add_argument("--csv", dest="format", action="store_const", const="csv")

    parser.add_argument("--log-file", default=None, help="write logs to a file")
    parser.add_argument("--verbose", action="store_true", help="log debug output")

    commands = parser.add_subparsers(dest="command", required=True)

    analyze_parser = commands.add_parser("analyze", help="analyze a single cover")
    analyze_parser.add_argument("spec", help="e.g. as:q=2,f=x^3")
    analyze_parser.set_defaults(function=_analyze)

    lpoly_parser = commands.add_parser("lpoly", help="print the L-polynomial")
    lpoly_parser.add_argument("spec")
    lpoly_parser.set_defaults(function=_lpoly)

    places_parser = commands.add_parser("places", help="count places of a cover")
    places_parser.add_argument("spec")
    places_parser.add_argument("--bound", type=int, default=4)
    places_parser.add_argument("--splitting-bound", type=int, default=1)
    places_parser.set_defaults(function=_places)

    sweep_parser = commands.add_parser("sweep", help="run a family sweep")
    sweep_parser.add_argument(
        "--plan", required=True, help="a JSON plan file, or the name of a bundled plan"
    )
    sweep_parser.add_argument("--svg", default=None, help="save the ratio plot")
    sweep_parser.add_argument(
        "--svg-date", action="store_true", help="embed the date in the plot"
    )
    sweep_parser.add_argument("--csv-path", default=None)
    sweep_parser.add_argument("--json-path", default=None)
    sweep_parser.set_defaults(function=_sweep)

    oracle_parser = commands.add_parser("oracle", help="cross-check random covers")
    oracle_parser.add_argument("--seed", type=int, default=1)
    oracle_parser.add_argument("--count", type=int, default=25)
    oracle_parser.add_argument("--max-genus", type=int, default=6)
    oracle_parser.add_argument("--replay", default=None, help="check one cover")
    oracle_parser.add_argument(
        "--corrupt", action="append", default=None, help=argparse.SUPPRESS
    )
    oracle_parser.set_defaults(function=_oracle)

    irreducible_parser = commands.add_parser(
        "irr-count", help="count monic irreducible polynomials"
    )
    irreducible_parser.add_argument("--q", type=int, required=True)
    irreducible_parser.add_argument("--m", type=int, required=True)
    irreducible_parser.set_defaults(function=_irreducible_count)

    return parser


def main(argv=None, stream=None):
    """Runs the command line interface.

    Parameters
    ----------
    argv: list of str, optional
        The arguments, defaulting to ``sys.argv[1:]``.
    stream: file-like, optional
        Where results are written, defaulting to standard output.

    Returns
    -------
    int
        The exit code: 0 on success, 1 for an oracle mismatch or an aborted
        sweep, 2 for a parse error, 3 for an invalid cover, 4 when the budget
        is exceeded and 5 when an invariant is breached.
    """
    stream = sys.stdout if stream is None else stream

    parser = build_parser()
    arguments = parser.parse_args(argv)

    level = logging.DEBUG if arguments.verbose else logging.INFO
    setup_timestamp_logging(
        arguments.log_file, None if arguments.log_file else sys.stderr, level
    )

    try:

        set_default_options(
            EngineOptions(
                budget=arguments.budget,
                precision_digits=arguments.precision_digits,
                maximum_precision_digits=(
                    None
                    if arguments.precision_digits is None
                    else max(120, arguments.precision_digits)
                ),
                number_of_threads=arguments.threads,
            )
        )

        return arguments.function(arguments, stream)

    except AbelZetaError as e:

        logger.error(str(e))
        return e.exit_code

    except (json.JSONDecodeError, argparse.ArgumentTypeError) as e:

        logger.error(str(e))
        return 2

    except ValueError as e:

        logger.error(str(e))
        return 3


if __name__ == "__main__":
    sys.exit(main())
