import threading
from abc import ABC, abstractmethod
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, List, Tuple

from app.logging_config import get_logger
from app.modules.howard.service import g_potential
from app.modules.kernels.service import (
    assoc_stirling1,
    assoc_stirling2,
    binomial_rational,
    double_factorial,
    stirling2,
)
from .models import FormulaName

logger = get_logger(__name__)

HALF = Fraction(1, 2)

Term = Tuple[Tuple[int, int], Fraction]


class _BSequence:
    """Мемоизированная последовательность b_m: b_0 = b_1 = 1"""

    def __init__(self):
        self._values: List[Fraction] = [Fraction(1), Fraction(1)]
        self._lock = threading.Lock()

    def __getitem__(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError(f"Index must be nonnegative, got {m}")
        if m >= len(self._values):
            with self._lock:
                while len(self._values) <= m:
                    self._values.append(self._next(len(self._values)))
        return self._values[m]

    def _next(self, m: int) -> Fraction:
        b = self._values
        # Для m = 2 сумма по j = 2..m-1 пуста
        correction = sum((j * b[j] * b[m - j + 1] for j in range(2, m)), Fraction(0))
        return (b[m - 1] - correction) / (m + 1)

    def reset(self) -> None:
        with self._lock:
            del self._values[2:]


_b_sequence = _BSequence()


def stirling_b(m: int) -> Fraction:
    return _b_sequence[m]


def reset_b_sequence() -> None:
    """Сбрасывает мемоизированные b_m до b_0, b_1"""
    _b_sequence.reset()


class BaseFormula(ABC):
    """Базовый класс для всех формул коэффициентов Стирлинга"""

    @property
    @abstractmethod
    def name(self) -> FormulaName:
        pass

    @abstractmethod
    def compute(self, k: int) -> Fraction:
        pass

    def __call__(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        value = self.compute(k)
        logger.debug(f"{self.name.value}: a_{k} = {value}")
        return value


class RecurrenceFormula(BaseFormula):
    """a_k = (2k+1)!! b_{2k+1}"""

    @property
    def name(self) -> FormulaName:
        return FormulaName.RECURRENCE

    def compute(self, k: int) -> Fraction:
        return double_factorial(2 * k + 1) * stirling_b(2 * k + 1)


class _AssociatedSumFormula(BaseFormula):
    """Общая схема сумм с 3-ассоциированными числами Стирлинга"""

    @abstractmethod
    def kernel(self, p: int, q: int) -> int:
        pass

    def compute(self, k: int) -> Fraction:
        total = Fraction(0)
        for j in range(2 * k + 1):
            term = Fraction(
                self.kernel(2 * k + 2 * j, j), 2 ** (k + j) * factorial(k + j)
            )
            total += -term if j % 2 else term
        return total


class ComtetFormula(_AssociatedSumFormula):
    """Сумма с числами перестановок d_3"""

    @property
    def name(self) -> FormulaName:
        return FormulaName.COMTET

    def kernel(self, p: int, q: int) -> int:
        return assoc_stirling1(p, q)


class BrassescoMendezFormula(_AssociatedSumFormula):
    """Сумма с 3-ассоциированными числами Стирлинга второго рода"""

    @property
    def name(self) -> FormulaName:
        return FormulaName.BRASSESCO_MENDEZ

    def kernel(self, p: int, q: int) -> int:
        return assoc_stirling2(p, q)


class _StirlingSumFormula(BaseFormula):
    """Двойная сумма по (i, j) с общим множителем (2k)!/(2^k k!)"""

    @staticmethod
    def prefactor(k: int) -> Fraction:
        return Fraction(factorial(2 * k), 2**k * factorial(k))

    @staticmethod
    def weight(k: int, i: int) -> Fraction:
        return (
            binomial_rational(k + i - HALF, i)
            * binomial_rational(3 * k + HALF, 2 * k - i)
            * 2**i
        )

    @abstractmethod
    def terms(self, k: int) -> Iterator[Term]:
        """Слагаемые ((i, j), значение) без общего множителя"""

    def compute(self, k: int) -> Fraction:
        total = sum((value for _, value in self.terms(k)), Fraction(0))
        return self.prefactor(k) * total


class Theorem1Formula(_StirlingSumFormula):
    """Представление через числа Стирлинга второго рода S(p, q)"""

    @property
    def name(self) -> FormulaName:
        return FormulaName.THEOREM1

    def terms(self, k: int) -> Iterator[Term]:
        for i in range(2 * k + 1):
            weight = self.weight(k, i)
            for j in range(i + 1):
                p = 2 * k + i + j
                inner = Fraction(
                    comb(i, j) * (-1) ** j * factorial(j) * stirling2(p, j),
                    factorial(p),
                )
                yield (i, j), weight * inner


class CorollaryFormula(_StirlingSumFormula):
    """Та же сумма, но S(p, q) раскрыто явной формулой: только четыре действия"""

    @property
    def name(self) -> FormulaName:
        return FormulaName.COROLLARY

    def terms(self, k: int) -> Iterator[Term]:
        for i in range(2 * k + 1):
            weight = self.weight(k, i)
            for j in range(i + 1):
                p = 2 * k + i + j
                alternating = sum(
                    (-1) ** s * comb(j, s) * (j - s) ** p for s in range(j + 1)
                )
                inner = Fraction(comb(i, j) * (-1) ** j * alternating, factorial(p))
                yield (i, j), weight * inner


class PotentialFormula(BaseFormula):
    """a_k = G_{2k}^{(k+1/2)} / (2^k k!) через теорему Ховарда"""

    @property
    def name(self) -> FormulaName:
        return FormulaName.POTENTIAL

    def compute(self, k: int) -> Fraction:
        return g_potential(2 * k, k + HALF) / (2**k * factorial(k))


def coeff_recurrence(k: int) -> Fraction:
    return RecurrenceFormula()(k)


def coeff_comtet(k: int) -> Fraction:
    return ComtetFormula()(k)


def coeff_brassesco_mendez(k: int) -> Fraction:
    return BrassescoMendezFormula()(k)


def coeff_theorem1(k: int) -> Fraction:
    return Theorem1Formula()(k)


def coeff_corollary(k: int) -> Fraction:
    return CorollaryFormula()(k)


def coeff_via_potential(k: int) -> Fraction:
    return PotentialFormula()(k)
