import argparse
from typing import Optional

import mpmath

from app.cli_types import positive_int
from app.config import settings
from .service import format_error, stirling_approx


def cmd_approx(n: int, terms: int, precision: Optional[int] = None) -> str:
    """Приближение n! усеченным рядом, точное значение и ошибка"""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    result = stirling_approx(n, terms, precision)
    lines = [
        f"n: {result.n}",
        f"terms: {result.terms_used}",
        f"precision: {result.precision}",
        f"approx: {mpmath.nstr(result.approx, result.precision)}",
        f"exact: {result.exact}",
        f"rel_error: {format_error(result.rel_error)}",
    ]
    lines.extend(
        f"term[{k}]: {format_error(magnitude)}"
        for k, magnitude in enumerate(result.term_magnitudes)
    )
    return "\n".join(lines)


def _handle_approx(args: argparse.Namespace) -> int:
    print(cmd_approx(args.n, args.terms, args.precision))
    return 0


def register(subparsers) -> None:
    """Регистрирует команду approx"""
    approx = subparsers.add_parser("approx", help="Ряд Стирлинга против точного n!")
    approx.add_argument("n", type=positive_int)
    approx.add_argument(
        "--terms", type=positive_int, default=settings.series.default_terms
    )
    approx.add_argument(
        "--precision", type=positive_int, default=settings.series.default_precision
    )
    approx.set_defaults(handler=_handle_approx)
