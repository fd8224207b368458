"""Command-line front end.

    minorbit compute --type G2
    minorbit compute --type A --rank 1 --format json
    minorbit diagram --type F4 --format dot
    minorbit matrices --type E6
    minorbit verify --type D5 -v
    minorbit all --max-rank 6
    minorbit all --preset quick

Results go to stdout, diagnostics and progress to stderr. Exit status is 0 when
every executed check passes, 1 when one fails and 2 for a bad request.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import re
import sys
from typing import TYPE_CHECKING

from minorbit.config import DEFAULT, QUICK, THOROUGH, EngineConfig
from minorbit.errors import CapExceededError, MinorbitError
from minorbit.gysin import minimal_orbit_cohomology
from minorbit.orbitposet import build_level_diagram, differential_matrices, export_dot
from minorbit.orbitposet import render_text as render_diagram
from minorbit.render import (
    render_json,
    render_matrices_json,
    render_matrices_text,
    render_report_json,
    render_report_text,
    render_text,
)
from minorbit.rootsys import build
from minorbit.suite import Suite
from minorbit.tracer import StderrTracer
from minorbit.verify import standard_checks, sweep

if TYPE_CHECKING:
    from collections.abc import Sequence

    from minorbit.rootsys import RootSystem

logger = logging.getLogger("minorbit")

COMMANDS = ("compute", "diagram", "matrices", "verify", "all")
PRESETS = {"default": DEFAULT, "quick": QUICK, "thorough": THOROUGH}
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_TYPE_ARG = re.compile(r"^([A-Ga-g])(\d*)$")


class UsageError(MinorbitError):
    """A request the parser accepted but that does not make sense."""


@dataclasses.dataclass(frozen=True)
class ComputationRequest:
    """One CLI invocation after parsing."""

    command: str
    family: str | None
    rank: int | None
    fmt: str
    config: EngineConfig
    verbose: bool = False

    def __post_init__(self) -> None:
        if self.fmt == "dot" and self.command != "diagram":
            raise UsageError("--format dot is only available for diagram")
        if self.command != "all" and (self.family is None or self.rank is None):
            raise UsageError(f"{self.command} needs --type (and --rank for a bare family letter)")


def _parse_type(value: str | None, rank: int | None) -> tuple[str | None, int | None]:
    if value is None:
        return None, rank
    match = _TYPE_ARG.match(value.strip())
    if match is None:
        raise UsageError(f"cannot read type {value!r}; use e.g. G2, E8 or A with --rank")
    family, digits = match.group(1).upper(), match.group(2)
    if digits and rank is not None and int(digits) != rank:
        raise UsageError(f"--type {value} conflicts with --rank {rank}")
    return family, int(digits) if digits else rank


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorbit",
        description="Integral cohomology of the minimal nilpotent orbit.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--type", dest="type_name", help="G2, E8, ... or a family letter")
    parser.add_argument("--rank", type=int, help="rank when --type is a family letter")
    parser.add_argument("--format", dest="fmt", choices=("text", "json", "dot"), default="text")
    parser.add_argument("--cap", type=int, help="coset enumeration cap for the Weyl oracle")
    parser.add_argument("--max-rank", type=int, help="largest rank visited by all")
    parser.add_argument(
        "--preset", choices=sorted(PRESETS), default="default",
        help="size limits to start from; --cap and --max-rank override them",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="per-check progress")
    return parser


def parse_request(argv: Sequence[str] | None = None) -> ComputationRequest:
    """Parse argv into a request.

    Raises:
        UsageError: For option combinations argparse cannot reject on its own.
        SystemExit: From argparse on unknown options.
    """
    args = build_parser().parse_args(argv)
    family, rank = _parse_type(args.type_name, args.rank)
    changes: dict[str, int] = {}
    if args.cap is not None:
        changes["coset_cap"] = args.cap
    if args.max_rank is not None:
        changes["sweep_max_rank"] = args.max_rank
        changes["sweep_max_rank_a"] = args.max_rank
    try:
        config = dataclasses.replace(PRESETS[args.preset], **changes)
    except ValueError as e:
        raise UsageError(str(e)) from e
    return ComputationRequest(args.command, family, rank, args.fmt, config, args.verbose)


def _system(request: ComputationRequest) -> RootSystem:
    if request.family is None or request.rank is None:
        raise UsageError(f"{request.command} needs a root system type")
    return build(request.family, request.rank, request.config)


def run(request: ComputationRequest) -> tuple[int, str]:
    """Execute a request; returns (exit status, stdout text)."""
    if request.command == "compute":
        cohomology = minimal_orbit_cohomology(_system(request))
        out = render_json(cohomology) if request.fmt == "json" else render_text(cohomology)
        return EXIT_OK, out

    if request.command == "diagram":
        diagram = build_level_diagram(_system(request))
        return EXIT_OK, export_dot(diagram) if request.fmt == "dot" else render_diagram(diagram)

    if request.command == "matrices":
        rs = _system(request)
        mats = differential_matrices(build_level_diagram(rs))
        if request.fmt == "json":
            return EXIT_OK, render_matrices_json(rs.name, mats)
        return EXIT_OK, render_matrices_text(rs.name, mats)

    systems = [_system(request)] if request.command == "verify" else sweep(request.config)
    suite = Suite(request.command).use(StderrTracer(verbose=request.verbose))
    report = suite.run_many(
        standard_checks(request.config),
        systems,
        metadata={"config": dataclasses.asdict(request.config)},
    )
    out = render_report_json(report) if request.fmt == "json" else render_report_text(report)
    return (EXIT_OK if report.passed else EXIT_FAILED), out


def main(argv: Sequence[str] | None = None) -> int:
    try:
        request = parse_request(argv)
    except UsageError as e:
        print(f"minorbit: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if request.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logger.debug("running %s with %s", request.command, request.config)
    try:
        status, out = run(request)
    except CapExceededError as e:
        print(f"minorbit: {e}", file=sys.stderr)
        return EXIT_FAILED
    except MinorbitError as e:
        print(f"minorbit: {e}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return status
