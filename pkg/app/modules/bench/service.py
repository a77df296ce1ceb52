import timeit
from fractions import Fraction
from typing import List, Optional

import pandas as pd

from app.config import settings
from app.logging_config import get_logger
from app.modules.coefficients.formulas import reset_b_sequence
from app.modules.coefficients.models import REFERENCE_FORMULA
from app.modules.coefficients.service import CoefficientService
from app.modules.kernels.service import reset_triangles
from .models import BenchRecord, VerificationError

logger = get_logger(__name__)


def result_digits(value: Fraction) -> int:
    return len(str(abs(value.numerator))) + len(str(value.denominator))


def cold_start() -> None:
    """Очищает общие таблицы и b_m: каждый замер начинается с пустых кэшей"""
    reset_triangles()
    reset_b_sequence()


class BenchmarkService:
    """Сравнение времени работы формул коэффициентов"""

    def __init__(self, coefficient_service: Optional[CoefficientService] = None):
        self.coefficient_service = coefficient_service or CoefficientService()

    def run(self, k_max: int, reps: Optional[int] = None) -> List[BenchRecord]:
        """Замеры всех формул для k = 0..k_max; сверка предшествует замеру.

        Каждое повторение стартует с пустых кэшей, так что время включает
        построение нужных строк таблиц и членов b_m.
        """
        reps = settings.bench.default_reps if reps is None else reps
        if k_max < 0:
            raise ValueError(f"k_max must be nonnegative, got {k_max}")
        if reps < 1:
            raise ValueError(f"Repetitions must be positive, got {reps}")

        logger.info(f"Benchmarking formulas for k = 0..{k_max}, {reps} repetitions")
        records = []
        for k in range(k_max + 1):
            # Сверка может идти параллельно, замеры - строго последовательно
            report = self.coefficient_service.report(k)
            if not report.agree:
                names = ", ".join(name.value for name in report.disagreeing())
                raise VerificationError(
                    f"a_{k}: {names} differ from {REFERENCE_FORMULA.value}"
                )

            for name, value in report.values.items():
                formula = self.coefficient_service.get_formula(name)
                timer = timeit.Timer(lambda: formula(k), setup=cold_start)
                # Минимум по повторениям наименее зашумлен
                wall_time = min(timer.repeat(repeat=reps, number=1))
                records.append(
                    BenchRecord(
                        formula=name,
                        k=k,
                        wall_time=wall_time,
                        result_digits=result_digits(value),
                    )
                )
        logger.info(f"Benchmark finished: {len(records)} records")
        return records


def render_records(records: List[BenchRecord]) -> str:
    frame = pd.DataFrame(
        {
            "formula": [record.formula.value for record in records],
            "k": [record.k for record in records],
            "wall_time_s": [f"{record.wall_time:.6f}" for record in records],
            "result_digits": [record.result_digits for record in records],
            "verified": ["true" if record.verified else "false" for record in records],
        }
    )
    return frame.to_string(index=False)
