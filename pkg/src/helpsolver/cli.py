"""Command-line driver: ``helpsolver check`` and ``helpsolver validate``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .bounds import UnboundedError
from .report import build_report, render_json, render_text
from .solver import Solver
from .tables import GroupData, TableError, parse_group_data, validate_orthogonality

EXIT_VERIFIED = 0
EXIT_ERROR = 1
EXIT_EXCEPTIONAL = 2


@dataclass(frozen=True)
class CliConfig:
    group: Path
    order: int | None = None
    use_brauer: bool = True
    max_fallback_bound: int | None = None
    fmt: str = "text"
    out: Path | None = None


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helpsolver",
        description="Partial augmentation solver for torsion units in integral group rings.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log solver progress")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="solve one order or all orders")
    check.add_argument("--group", required=True, type=Path, help="group JSON file")
    mode = check.add_mutually_exclusive_group()
    mode.add_argument("--order", type=int, help="check a single unit order")
    mode.add_argument("--all", action="store_true", help="check every order (default)")
    check.add_argument("--no-brauer", action="store_true", help="use the ordinary table only")
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.add_argument("--out", type=Path, help="write the report here instead of stdout")
    check.add_argument("--max-fallback-bound", type=int, default=None, metavar="B",
                       help="scan [-B, B] when the constraints leave a variable unbounded "
                            "(default: fail)")

    validate = sub.add_parser("validate", help="parse a group file and check orthogonality")
    validate.add_argument("--group", required=True, type=Path, help="group JSON file")
    return parser


def _load(path: Path) -> GroupData:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_group_data(text)
    except TableError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _check(cfg: CliConfig) -> int:
    g = _load(cfg.group)
    if cfg.order is not None and (cfg.order < 2 or g.exponent % cfg.order):
        raise UsageError(f"{cfg.order} does not divide exponent {g.exponent}"
                         if cfg.order >= 1 else f"invalid order {cfg.order}")
    solver = Solver(g, use_brauer=cfg.use_brauer, max_fallback_bound=cfg.max_fallback_bound)
    try:
        if cfg.order is None:
            verdicts = solver.solve_all()
        else:
            verdicts = [solver.solve_order(cfg.order)]
    except UnboundedError as exc:
        raise UsageError(str(exc)) from None
    report = build_report(g, verdicts, solver.tables_used)
    text = render_json(report) if cfg.fmt == "json" else render_text(report)
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        try:
            cfg.out.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {cfg.out}: {exc.strerror}") from None
    return EXIT_EXCEPTIONAL if report.open_exceptions else EXIT_VERIFIED


def _validate(path: Path) -> int:
    g = _load(path)
    violations = validate_orthogonality(g)
    for v in violations:
        print(f"{path}: {v}", file=sys.stderr)
    if violations:
        return EXIT_ERROR
    brauer = ", ".join(f"mod {t.prime}" for t in g.brauer) or "none"
    print(f"{g.name}: {len(g.classes)} classes, exponent {g.exponent}, "
          f"Brauer tables: {brauer}; orthogonality ok")
    return EXIT_VERIFIED


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_VERIFIED
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "validate":
            return _validate(args.group)
        cfg = CliConfig(args.group, args.order, not args.no_brauer, args.max_fallback_bound,
                        args.format, args.out)
        return _check(cfg)
    except UsageError as exc:
        print(f"helpsolver: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
