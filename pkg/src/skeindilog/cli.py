"""Command-line entry point: ``skeindilog <command> [options]``.

Exit status is 0 when the check passes, 1 when it fails and 2 on usage or
input errors.  The degree ceiling (default 16) can be overridden with the
``SKEINDILOG_MAX_DEGREE_CEILING`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import dilog, morphism, quantum_torus, torus_skein
from .graded import GradedElement
from .parsing import ParseError, SemanticError, parse_expression
from .report import Stopwatch, VerificationReport
from .scalars import Scalar

COMMANDS = ("pentagon", "phi-pentagon", "identity-2-2", "ad-check", "jacobi",
            "homomorphism", "dilog-image", "expand")
ALGEBRAS = ("torus-skein", "quantum-torus")
DEFAULT_CEILING = 16
CEILING_ENV = "SKEINDILOG_MAX_DEGREE_CEILING"

DEFAULT_DEGREE = {
    "pentagon": 8, "phi-pentagon": 12, "identity-2-2": 4, "ad-check": 6,
    "jacobi": 0, "homomorphism": 5, "dilog-image": 6, "expand": 6,
}
DEFAULT_SAMPLES = {"ad-check": 10, "jacobi": 100, "homomorphism": 50}

EXPR_HELP = """\
expression grammar:
  generators  P[i,j]  X[i,j]  Q[i,j]  Qinv[i,j]
  scalars     integers, s, q (= s^2), e.g. (s - s^-1), 1/2, q^-1
  operators   + - * /  (division by scalars only)  ^  (integer powers)
  In the quantum-torus algebra P[i,j] is read as its image X[i,j] and
  Q/Qinv are the quantum dilogarithm and its inverse.
"""


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    algebra: str = "torus-skein"
    max_degree: int = 6
    samples: int = 1
    seed: int = 0
    format: str = "text"
    expr: str | None = None
    timing: bool = True


def degree_ceiling() -> int:
    raw = os.environ.get(CEILING_ENV)
    if raw is None:
        return DEFAULT_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{CEILING_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError(f"{CEILING_ENV} must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeindilog",
        description="Exact verification of skein dilogarithm pentagon identities.",
        epilog=EXPR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--algebra", choices=ALGEBRAS, default="torus-skein")
    parser.add_argument("--max-degree", type=int, default=None,
                        help="delta-degree cutoff (default depends on the command)")
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--expr", help="expression for the expand command")
    parser.add_argument("--no-timing", dest="timing", action="store_false",
                        help="report elapsed_ms as 0 so output is byte-reproducible")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    max_degree = DEFAULT_DEGREE[args.command] if args.max_degree is None else args.max_degree
    if max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    ceiling = degree_ceiling()
    if max_degree > ceiling:
        raise UsageError(f"--max-degree {max_degree} exceeds the ceiling {ceiling} "
                         f"(raise it with {CEILING_ENV})")
    samples = DEFAULT_SAMPLES.get(args.command, 1) if args.samples is None else args.samples
    if samples < 1:
        raise UsageError("--samples must be positive")
    if args.command == "expand" and not args.expr:
        raise UsageError("expand needs --expr")
    return CliConfig(args.command, args.algebra, max_degree, samples, args.seed,
                     args.format, args.expr, args.timing)


def _generators(algebra: str, cutoff: int):
    cls = dilog.algebra_class(algebra)

    def make(name: str, i: int, j: int):
        try:
            if name == "P" or (name == "X" and algebra == "quantum-torus"):
                return cls.generator((i, j), cutoff)
            if name == "X":
                raise SemanticError(f"X[{i},{j}] is a quantum-torus generator; "
                                    "use --algebra quantum-torus or P[i,j]")
            if name == "Q":
                return dilog.skein_dilog((i, j), cutoff, algebra)
            if name == "Qinv":
                return dilog.dilog_inverse((i, j), cutoff, algebra)
        except ValueError as exc:
            if isinstance(exc, SemanticError):
                raise
            raise SemanticError(str(exc)) from None
        raise SemanticError(f"unknown generator {name}[{i},{j}]")

    return make


def expand(expr: str, config: CliConfig) -> GradedElement:
    value = parse_expression(expr, _generators(config.algebra, config.max_degree))
    cls = dilog.algebra_class(config.algebra)
    if isinstance(value, Scalar):
        return cls.constant(value, config.max_degree)
    return value.truncate(config.max_degree)


def run_check(config: CliConfig) -> VerificationReport:
    c = config
    if c.command == "pentagon":
        return dilog.pentagon_check(c.max_degree, c.algebra)
    if c.command == "phi-pentagon":
        return quantum_torus.verify_phi_pentagon(c.max_degree)
    if c.command == "identity-2-2":
        return dilog.identity_2_2_check()
    if c.command == "ad-check":
        return dilog.ad_property_check(c.max_degree, c.samples, c.algebra)
    if c.command == "jacobi":
        return torus_skein.jacobi_suite(c.samples, c.seed)
    if c.command == "homomorphism":
        return morphism.homomorphism_check(c.max_degree, c.samples, c.seed)
    if c.command == "dilog-image":
        return morphism.dilog_compatibility_check(c.max_degree)
    raise UsageError(f"unknown command {c.command!r}")


def run(config: CliConfig, out=None) -> int:
    out = out or sys.stdout
    if config.command == "expand":
        report = VerificationReport("expand", config.algebra, config.max_degree)
        with Stopwatch(report):
            element = expand(config.expr, config)
        if not config.timing:
            report.elapsed_ms = 0
        if config.format == "json":
            payload = report.to_dict()
            payload.update(expression=config.expr, result=element.to_text(),
                           terms=element.to_json())
            out.write(json.dumps(payload) + "\n")
        else:
            out.write(element.to_text() + "\n")
        return 0
    report = run_check(config)
    if not config.timing:
        report.elapsed_ms = 0
    out.write((report.to_json() if config.format == "json" else report.to_text()) + "\n")
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        config = config_from_args(args)
        return run(config)
    except (UsageError, ParseError, SemanticError) as exc:
        print(f"skeindilog: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
