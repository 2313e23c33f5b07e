#!/usr/bin/env python3
import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path
from typing import Dict, List, Optional, Union

from .braided import BraidedBicomoduleAlgebraData, BraidedHopfAlgebraData, BraidedYDData, structure_theorem_braided
from .catalog import ENTRIES, Example, Param, build_example, list_examples, verify_example
from .core import LinearMap
from .exceptions import (
    AlgebraFileError,
    DimensionLimitError,
    HopfkitError,
    NotIdempotentError,
    PreconditionError,
    ReportError,
    SingularMapError,
)
from .field import QQ, Field, parse_field_option
from .files import example_document, hopf_document, isomorphism_document, read_example, write_document
from .quasi_hopf import (
    QuasiBicomoduleAlgebraData,
    QuasiHopfAlgebraData,
    YetterDrinfeldAlgebraData,
    structure_theorem_quasi,
)
from .report import Report
from .weak_hopf import WeakBicomoduleAlgebraData, WeakHopfAlgebraData, structure_theorem_weak

# Constants
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_FORMAT = "json"
DEFAULT_FIELD = "rational"
DEFAULT_MAX_DIM = 64
MAX_DIM_VARIABLE = "HOPFKIT_MAX_DIM"

EXIT_PASS = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

DEFAULTS: Dict[str, Union[int, str]] = {
    "log_level": DEFAULT_LOG_LEVEL,
    "format": DEFAULT_FORMAT,
    "field": DEFAULT_FIELD,
    "max_dim": DEFAULT_MAX_DIM,
}

KINDS = ("quasi-hopf", "weak-hopf", "braided-hopf", "module-algebra", "yd-module", "bicomodule-algebra")
VARIANTS = ("quasi", "weak", "braided")

# Errors that mean the mathematics failed rather than the invocation.
MATH_ERRORS = (ReportError, SingularMapError, NotIdempotentError)


def max_dim_from_env() -> int:
    """The carrier dimension limit from HOPFKIT_MAX_DIM (default 64)."""
    raw = os.environ.get(MAX_DIM_VARIABLE)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError as e:
        raise DimensionLimitError(f"{MAX_DIM_VARIABLE} must be a positive integer, got {raw!r}") from e
    if value < 1:
        raise DimensionLimitError(f"{MAX_DIM_VARIABLE} must be a positive integer, got {raw!r}")
    return value


def check_dimensions(example: Example, max_dim: int) -> None:
    for what, dim in (("Hopf algebra", example.hopf.dim), (example.kind, example.dim)):
        if dim > max_dim:
            raise DimensionLimitError(f"{example.name}: {what} of dimension {dim} exceeds the limit {max_dim}")


def field_option(text: str) -> Field:
    try:
        return parse_field_option(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def param_option(text: str) -> "tuple[str, Param]":
    """Parse NAME=VALUE; integer values become ints."""
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return name, int(value)
    except ValueError:
        return name, value


def emit_report(report: Report, output_format: str, timing: bool) -> None:
    """Render a report on stdout; JSON output also leaves a human summary on stderr."""
    if output_format == "text":
        print(report.summary())
        return
    print(json.dumps(report.to_dict(timing=timing), indent=2, sort_keys=True))
    print(report.summary(), file=sys.stderr)


def run_verify(args: argparse.Namespace) -> int:
    logger = logging.getLogger(__name__)
    example = read_example(args.path, max_dim_from_env())
    if args.kind is not None and args.kind != example.kind:
        raise AlgebraFileError(f"{args.path}: holds a {example.kind}, not a {args.kind}")
    start = time.perf_counter()
    report = verify_example(example)
    report.elapsed = time.perf_counter() - start
    logger.info(f"verified {example.name}: {len(report.checks)} checks, {len(report.failures)} failures")
    emit_report(report, args.format, args.timing)
    return EXIT_PASS if report.passed else EXIT_FAILURE


def _require_variant(example: Example, path: str, variant: str, kinds: "tuple[str, ...]") -> None:
    if example.variant != variant or example.kind not in kinds:
        expected = f"{variant} {'/'.join(kinds)}"
        raise AlgebraFileError(f"{path}: holds a {example.variant} {example.kind}, expected {expected}")


def run_structure_theorem(args: argparse.Namespace) -> int:
    logger = logging.getLogger(__name__)
    max_dim = max_dim_from_env()
    base = read_example(args.hopf_path, max_dim)
    source = read_example(args.bicomodule_path, max_dim)
    _require_variant(base, args.hopf_path, args.variant, ("quasi-hopf", "weak-hopf", "braided-hopf"))
    _require_variant(source, args.bicomodule_path, args.variant, ("bicomodule-algebra",))
    if hopf_document(source.hopf, source.context) != hopf_document(base.hopf, base.context):
        logger.warning(f"{args.bicomodule_path} embeds a Hopf algebra that differs from {args.hopf_path}")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    H, B, ctx = base.hopf, source.structure, base.context
    start = time.perf_counter()
    try:
        A: Union[YetterDrinfeldAlgebraData, BraidedYDData]
        iso: LinearMap
        iso_inv: LinearMap
        if isinstance(H, QuasiHopfAlgebraData) and isinstance(B, QuasiBicomoduleAlgebraData):
            quasi = structure_theorem_quasi(H, B)
            A, iso, iso_inv, report = quasi.coinvariants, quasi.psi, quasi.psi_inv, quasi.report
        elif isinstance(H, WeakHopfAlgebraData) and isinstance(B, WeakBicomoduleAlgebraData):
            weak = structure_theorem_weak(H, B)
            A, iso, iso_inv, report = weak.coinvariants, weak.phi, weak.phi_inv, weak.report
        elif isinstance(H, BraidedHopfAlgebraData) and isinstance(B, BraidedBicomoduleAlgebraData) and ctx is not None:
            if B.v is None:
                raise PreconditionError("the bicomodule algebra carries no morphism v: H → B")
            braided = structure_theorem_braided(ctx, H, B, B.v)
            A, iso, iso_inv, report = braided.coinvariants, braided.omega, braided.omega_inv, braided.report
        else:
            raise AlgebraFileError(f"{args.bicomodule_path}: not a bicomodule algebra over {args.hopf_path}")
    except ReportError as e:
        if e.report is not None:
            e.report.elapsed = time.perf_counter() - start
            write_document(out / "report.json", e.report.to_dict(timing=args.timing))
        raise
    report.elapsed = time.perf_counter() - start

    coinvariants: Example = Example("coinvariants", "yd-module", base.variant, H, ctx, A)
    write_document(out / "A.json", example_document(coinvariants))
    dims = (coinvariants.dim, H.dim)
    write_document(out / "iso.json", isomorphism_document(H.field, base.variant, dims, iso, iso_inv))
    write_document(out / "report.json", report.to_dict(timing=args.timing))
    logger.info(f"coinvariants of dimension {coinvariants.dim} written to {out}")
    emit_report(report, args.format, args.timing)
    return EXIT_PASS if report.passed else EXIT_FAILURE


def run_examples_list(args: argparse.Namespace) -> int:
    entries = list_examples()
    if args.format == "text":
        width = max(len(entry.name) for entry in entries)
        for entry in entries:
            defaults = " ".join(f"{k}={v}" for k, v in sorted(entry.defaults.items()))
            print(f"{entry.name:<{width}}  {entry.kind:<18}  {entry.summary}  {defaults}".rstrip())
        return EXIT_PASS
    listing = [
        {"name": entry.name, "kind": entry.kind, "summary": entry.summary, "defaults": dict(entry.defaults)}
        for entry in entries
    ]
    print(json.dumps(listing, indent=2, sort_keys=True))
    return EXIT_PASS


def run_examples_emit(args: argparse.Namespace) -> int:
    logger = logging.getLogger(__name__)
    params: Dict[str, Param] = dict(args.param or [])
    example = build_example(args.name, params, args.field)
    check_dimensions(example, max_dim_from_env())
    write_document(args.out, example_document(example))
    logger.info(f"emitted {args.name} ({ENTRIES[args.name].kind}) to {args.out}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log-level",
        default=DEFAULT_LOG_LEVEL,
        help=f"Log level (default: {DEFAULT_LOG_LEVEL})",
    )
    common.add_argument(
        "--format",
        choices=("json", "text"),
        default=DEFAULT_FORMAT,
        help=f"Rendering of reports and listings on stdout (default: {DEFAULT_FORMAT})",
    )
    common.add_argument(
        "--timing",
        action="store_true",
        help="Include elapsed seconds in JSON reports (makes output non-deterministic)",
    )

    parser = argparse.ArgumentParser(
        prog="hopfkit",
        description="Verify quasi-, weak and braided Hopf algebra data and certify structure theorems",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Examples:
  hopfkit examples list
  hopfkit examples emit sweedler --out sweedler.json
  hopfkit verify sweedler.json
  hopfkit structure-theorem H.json B.json --variant quasi --out result/

Exit codes: {EXIT_PASS} pass, {EXIT_USAGE} usage or parse error, {EXIT_FAILURE} mathematical failure.
{MAX_DIM_VARIABLE} caps the carrier dimension of loaded files (default: {DEFAULT_MAX_DIM}).
        """.strip(),
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    verify = commands.add_parser("verify", parents=[common], help="Check every axiom of the structure in a file")
    verify.add_argument("path", help="Algebra file")
    verify.add_argument("--kind", choices=KINDS, help="Require the file to hold this kind")
    verify.set_defaults(run=run_verify)

    theorem = commands.add_parser(
        "structure-theorem", parents=[common], help="Decompose a bicomodule algebra as a smash product"
    )
    theorem.add_argument("hopf_path", metavar="PATH_H", help="Hopf algebra file")
    theorem.add_argument("bicomodule_path", metavar="PATH_B", help="Bicomodule algebra file with an embedded v")
    theorem.add_argument("--variant", choices=VARIANTS, required=True, help="Which structure theorem to run")
    theorem.add_argument("--out", required=True, help="Directory for A.json, iso.json and report.json")
    theorem.set_defaults(run=run_structure_theorem)

    examples = commands.add_parser("examples", help="The example catalog")
    actions = examples.add_subparsers(dest="action", metavar="ACTION", required=True)
    listing = actions.add_parser("list", parents=[common], help="List catalog entries")
    listing.set_defaults(run=run_examples_list)
    emit = actions.add_parser("emit", parents=[common], help="Write a catalog entry as an algebra file")
    emit.add_argument("name", help="Catalog entry")
    emit.add_argument("--out", required=True, help="Output path")
    emit.add_argument(
        "--field",
        type=field_option,
        default=QQ,
        help=f"'rational' or 'prime:P' (default: {DEFAULT_FIELD})",
    )
    emit.add_argument(
        "--param",
        type=param_option,
        action="append",
        metavar="NAME=VALUE",
        help="Constructor parameter; can be used multiple times",
    )
    emit.set_defaults(run=run_examples_emit)
    return parser


def main(argv: Optional[List[str]] = None) -> None:
    """Main CLI function."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors
        sys.exit(EXIT_PASS if e.code in (0, None) else EXIT_USAGE)

    # Set up logging
    try:
        numeric_level = getattr(logging, args.log_level.upper())
    except AttributeError:
        print(f"Invalid log level: {args.log_level}", file=sys.stderr)
        sys.exit(EXIT_USAGE)

    logging.basicConfig(level=numeric_level, format="%(levelname)s: %(message)s", stream=sys.stderr)
    logger = logging.getLogger(__name__)

    try:
        code = args.run(args)
    except MATH_ERRORS as e:
        logger.error(f"Mathematical failure: {e}")
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_FAILURE)
    except HopfkitError as e:
        logger.debug(f"Usage error: {e}")
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    except Exception as e:
        logger.error(f"Exception occurred: {e}")
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    sys.exit(code)


def cli() -> None:
    """Entry point for the CLI."""
    main()


if __name__ == "__main__":
    cli()
