from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class TruncationError(ValueError):
    """Запрошенный коэффициент лежит за пределами известной части ряда"""


class ZeroLeadingCoefficientError(ValueError):
    """Старший (первый ненулевой) коэффициент ряда равен нулю"""


@dataclass(frozen=True)
class FormalPowerSeries:
    """Усеченный ряд в экспоненциальной нормировке F(x) = sum a_j x^j / j!.

    Хранит валюацию r и коэффициенты a_r, a_{r+1}, ..., a_{r+N}, где
    N - порядок усечения. Значение неизменяемо и может передаваться
    между потоками.
    """

    valuation: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.valuation < 0:
            raise ValueError(f"Valuation must be nonnegative, got {self.valuation}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("Series must carry at least its leading coefficient")
        if coeffs[0] == 0:
            raise ZeroLeadingCoefficientError(
                f"Leading coefficient a_{self.valuation} must be nonzero"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        """Порядок усечения N относительно валюации"""
        return len(self.coeffs) - 1

    @property
    def top(self) -> int:
        """Наибольший известный абсолютный индекс r + N"""
        return self.valuation + self.order

    @property
    def leading(self) -> Fraction:
        return self.coeffs[0]

    def coefficient(self, j: int) -> Fraction:
        """EGF-коэффициент при x^j/j! (абсолютный индекс)"""
        if j < 0:
            raise ValueError(f"Index must be nonnegative, got {j}")
        if j > self.top:
            raise TruncationError(
                f"Coefficient {j} requested from a series known up to {self.top}"
            )
        if j < self.valuation:
            return Fraction(0)
        return self.coeffs[j - self.valuation]

    def truncate(self, order: int) -> "FormalPowerSeries":
        if order < 0:
            raise ValueError(f"Truncation order must be nonnegative, got {order}")
        if order > self.order:
            raise TruncationError(
                f"Cannot extend a series of order {self.order} to order {order}"
            )
        return FormalPowerSeries(self.valuation, self.coeffs[: order + 1])

    def egf(self) -> Tuple[Fraction, ...]:
        """Полный вектор EGF-коэффициентов c_0..c_{r+N}"""
        return (Fraction(0),) * self.valuation + self.coeffs

    @classmethod
    def from_egf(cls, coeffs: Sequence) -> "FormalPowerSeries":
        """Строит ряд по полному вектору c_0..c_M, отбрасывая ведущие нули"""
        values = [Fraction(c) for c in coeffs]
        for r, value in enumerate(values):
            if value != 0:
                return cls(r, tuple(values[r:]))
        raise ZeroLeadingCoefficientError("Series has no nonzero coefficient")

    @classmethod
    def one(cls, order: int) -> "FormalPowerSeries":
        return cls(0, (Fraction(1),) + (Fraction(0),) * order)

    @classmethod
    def monomial(cls, power: int, order: int) -> "FormalPowerSeries":
        """x^power в экспоненциальной нормировке (коэффициент power!)"""
        return cls(power, (Fraction(factorial(power)),) + (Fraction(0),) * order)


class PotentialValue(BaseModel):
    """Значение потенциального многочлена F_n^{(z)}"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    z: Fraction
    value: Fraction

    @model_validator(mode="after")
    def check_constant_term(self):
        if self.n == 0 and self.value != 1:
            raise ValueError(f"F_0^(z) must equal 1, got {self.value}")
        return self
