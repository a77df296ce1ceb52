from typing import Any, List

from pydantic import BaseModel, ConfigDict, Field

# Значение mpmath (mpf) из контекста с рабочей точностью P + защитные цифры
HighPrecisionNumber = Any


class PrecisionError(ValueError):
    """Рабочей точности не хватает, чтобы различить члены ряда"""


class ApproxResult(BaseModel):
    """Усеченный ряд Стирлинга против точного n!"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(..., description="Аргумент факториала")
    terms_used: int = Field(..., description="Число членов ряда m")
    precision: int = Field(..., description="Рабочая точность P в десятичных цифрах")
    approx: HighPrecisionNumber = Field(..., description="Значение усеченного ряда")
    exact: int = Field(..., description="Точное n!")
    rel_error: HighPrecisionNumber = Field(..., description="|approx - exact| / exact")
    term_magnitudes: List[HighPrecisionNumber] = Field(
        ..., description="|a_k| / n^k для k < m"
    )


class TruncationResult(BaseModel):
    """Результат поиска оптимального числа членов"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    k_max: int
    m_star: int = Field(..., description="Число членов с минимальной ошибкой")
    m_limit: int = Field(
        ..., description="Последнее m, все члены которого различимы на точности P"
    )
    best_error: HighPrecisionNumber
    errors: List[HighPrecisionNumber] = Field(
        ..., description="Ошибка для m = 1..m_limit"
    )
    term_magnitudes: List[HighPrecisionNumber]
