import argparse
import sys
from typing import List, Optional

from app.config import settings
from app.logging_config import get_logger, setup_logging
from app.modules.bench.cli import register as register_bench
from app.modules.bench.models import VerificationError
from app.modules.coefficients.cli import register as register_coefficients
from app.modules.series.cli import register as register_series

logger = get_logger("main")

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Коэффициенты Стирлинга a_k в асимптотическом разложении n!",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Примеры использования:
  stirling coeff 3 --formula recurrence --format fraction
  stirling table 12 --format json
  stirling verify 12
  stirling approx 10 --terms 5 --precision 30
  stirling bench 8 --reps 3
        """,
    )
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Уровень логирования (по умолчанию из настроек)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    register_coefficients(subparsers)
    register_series(subparsers)
    register_bench(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа; возвращает код завершения"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse сообщает об ошибке использования кодом 2
        return int(exc.code or EXIT_OK)

    if args.log_level:
        setup_logging(args.log_level)

    logger.info(f"Running '{args.command}' ({settings.app_name} v{settings.version})")
    try:
        return args.handler(args)
    except VerificationError as e:
        logger.error(f"Verification failed: {e}")
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except ValueError as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
