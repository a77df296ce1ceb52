from pydantic import BaseModel, Field

from app.modules.coefficients.models import FormulaName


class VerificationError(RuntimeError):
    """Значение формулы не совпало с рекуррентностью до замера времени"""


class BenchRecord(BaseModel):
    """Замер одной формулы при одном k"""

    formula: FormulaName = Field(..., description="Имя формулы")
    k: int = Field(..., description="Индекс коэффициента")
    wall_time: float = Field(..., description="Минимальное время вызова, секунды")
    result_digits: int = Field(
        ..., description="Цифр в числителе и знаменателе несократимой дроби"
    )
    verified: bool = Field(True, description="Значение сверено с рекуррентностью")
