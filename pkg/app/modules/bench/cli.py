import argparse

from app.cli_types import nonnegative_int, positive_int
from app.config import settings
from .service import BenchmarkService, render_records


def cmd_bench(k_max: int, reps: int) -> str:
    """Таблица замеров всех формул"""
    records = BenchmarkService().run(k_max, reps)
    return render_records(records)


def _handle_bench(args: argparse.Namespace) -> int:
    print(cmd_bench(args.k_max, args.reps))
    return 0


def register(subparsers) -> None:
    """Регистрирует команду bench"""
    bench = subparsers.add_parser("bench", help="Сравнение времени работы формул")
    bench.add_argument("k_max", type=nonnegative_int)
    bench.add_argument("--reps", type=positive_int, default=settings.bench.default_reps)
    bench.set_defaults(handler=_handle_bench)
