"""Command-line entry point for suite runs."""
import argparse
import dataclasses
import logging
import sys
from typing import List, Optional

from src.askey.config import get_config, default_spec, load_config
from src.askey.errors import ConfigError
from src.askey.families import FAMILIES
from src.askey.models import SUITES, SuiteSpec
from src.askey.report import render, write_report
from src.askey.runner import run


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_CONFIG = 2

# --quick: exact suites only, small degrees
QUICK_SUITES = ["basic", "christoffel", "operators"]
QUICK_N_MAX = 4


def _csv(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="askey-verify",
        description="Exact verification of Christoffel-transform identities for the Askey-scheme families.",
        epilog="A full default run covers every family and suite and takes minutes; "
               "use --quick, or narrow --families and --suites, for local iteration.",
    )
    p.add_argument("--families", type=_csv, default=None,
                   help=f"Comma-separated family tags or 'all' (choices: {', '.join(FAMILIES)}).")
    p.add_argument("--suites", type=_csv, default=None,
                   help=f"Comma-separated suites (choices: {', '.join(SUITES)}).")
    p.add_argument("--n-max", type=int, default=None, dest="n_max", help="Largest degree index (>= 2).")
    p.add_argument("--config", type=str, default=None, help="INI suite configuration file.")
    p.add_argument("--report", type=str, default=None, help="Write the report to this path instead of stdout.")
    p.add_argument("--format", choices=["text", "structured"], default="text", dest="fmt",
                   help="Report format (default: text).")
    p.add_argument("--jobs", type=int, default=None, help="Worker threads.")
    p.add_argument("--seed", type=int, default=None, help="Seed for perturbing non-generic bindings.")
    p.add_argument("--mutate", action="store_true", help="Perturb alpha_{n,0} by +1; the run must then fail.")
    p.add_argument("--quick", action="store_true",
                   help=f"Run only {', '.join(QUICK_SUITES)} up to n_max {QUICK_N_MAX}; --suites and --n-max still apply.")
    p.add_argument("--env", type=str, default=None, help="Configuration profile (default, development, testing).")
    verbosity = p.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Debug logging.")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Only warnings and errors.")
    return p


def resolve_spec(args: argparse.Namespace, defaults: type) -> SuiteSpec:
    """Configuration file (or the bundled default) with command-line overrides applied.

    Raises:
        ConfigError: If the file or any override is invalid
    """
    spec = load_config(args.config, defaults) if args.config else default_spec(defaults)
    overrides = {}
    if args.families is not None:
        unknown = [tag for tag in args.families if tag != "all" and tag not in FAMILIES]
        if unknown:
            raise ConfigError(f"unknown families {unknown}", field="--families")
        overrides["families"] = ["all"] if "all" in args.families else args.families
    if args.suites is not None:
        overrides["suites"] = args.suites
    elif args.quick:
        overrides["suites"] = list(QUICK_SUITES)
    if args.n_max is not None:
        overrides["n_max"] = args.n_max
    elif args.quick:
        overrides["n_max"] = min(spec.n_max, QUICK_N_MAX)
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.mutate:
        overrides["mutate"] = True
    return dataclasses.replace(spec, **overrides) if overrides else spec


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI.

    Returns:
        0 if every check passed or was skipped, 1 on any failure, 2 on configuration errors
    """
    args = build_parser().parse_args(argv)
    try:
        defaults = get_config(args.env)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else defaults.LOG_LEVEL
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    try:
        spec = resolve_spec(args, defaults)
    except ConfigError as exc:
        logger.error(f"Invalid configuration: {exc}")
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    report = run(spec)
    if args.report:
        path = write_report(report, args.report, args.fmt)
        logger.info(f"Report written to {path}")
    else:
        sys.stdout.write(render(report, args.fmt))
    return EXIT_FAILURES if report.has_failures else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
