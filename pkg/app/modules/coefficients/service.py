from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Type

from app.config import CoefficientSettings, settings
from app.logging_config import get_logger
from .formulas import (
    BaseFormula,
    BrassescoMendezFormula,
    ComtetFormula,
    CorollaryFormula,
    PotentialFormula,
    RecurrenceFormula,
    Theorem1Formula,
)
from .models import CoeffReport, FormulaName

logger = get_logger(__name__)


class CoefficientService:
    """Сервис вычисления и перекрестной проверки коэффициентов Стирлинга"""

    def __init__(self, config: Optional[CoefficientSettings] = None):
        self.config = config or settings.coefficients
        self._formula_registry: Dict[FormulaName, Type[BaseFormula]] = {
            FormulaName.RECURRENCE: RecurrenceFormula,
            FormulaName.COMTET: ComtetFormula,
            FormulaName.BRASSESCO_MENDEZ: BrassescoMendezFormula,
            FormulaName.THEOREM1: Theorem1Formula,
            FormulaName.COROLLARY: CorollaryFormula,
            FormulaName.POTENTIAL: PotentialFormula,
        }

    @property
    def formula_names(self) -> List[FormulaName]:
        return list(self._formula_registry)

    def get_formula(self, name: FormulaName) -> BaseFormula:
        """Создает экземпляр формулы"""
        formula_class = self._formula_registry.get(FormulaName(name))
        if not formula_class:
            raise ValueError(f"Unknown formula: {name}")
        return formula_class()

    def compute(self, name: FormulaName, k: int) -> Fraction:
        return self.get_formula(name)(k)

    def report(self, k: int) -> CoeffReport:
        """Считает a_k всеми формулами; порядок значений фиксирован реестром"""
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")

        names = self.formula_names
        if self.config.parallel and self.config.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.config.max_workers) as pool:
                futures = {name: pool.submit(self.compute, name, k) for name in names}
                values = {name: futures[name].result() for name in names}
        else:
            values = {name: self.compute(name, k) for name in names}

        report = CoeffReport(k=k, values=values)
        if not report.agree:
            disagreeing = ", ".join(name.value for name in report.disagreeing())
            logger.warning(f"a_{k}: formulas disagree with recurrence: {disagreeing}")
        return report

    def verify_all(self, k_max: int) -> List[CoeffReport]:
        """Отчеты для k = 0..k_max; расхождение - это данные, а не исключение"""
        if k_max < 0:
            raise ValueError(f"k_max must be nonnegative, got {k_max}")

        logger.info(f"Verifying Stirling coefficients for k = 0..{k_max}")
        reports = [self.report(k) for k in range(k_max + 1)]
        failed = sum(1 for report in reports if not report.agree)
        logger.info(
            f"Verification finished: {len(reports) - failed} agree, {failed} differ"
        )
        return reports


def verify_all(k_max: int) -> List[CoeffReport]:
    return CoefficientService().verify_all(k_max)
