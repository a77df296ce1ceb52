"""Схемы вывода коэффициентов: дроби, десятичная запись, JSON, CSV"""

import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any, List, Optional

import pandas as pd
from pydantic import BaseModel, Field

from .models import CoeffReport, FormulaName


class OutputFormat(BaseModel):
    """Формат вывода коэффициента: fraction, decimal[:P] или json"""

    kind: str = Field(..., description="fraction | decimal | json")
    digits: Optional[int] = Field(None, description="Значащие цифры для decimal")

    @classmethod
    def parse(cls, text: str, default_digits: int) -> "OutputFormat":
        kind, _, digits = text.strip().lower().partition(":")
        if kind in ("fraction", "json") and not digits:
            return cls(kind=kind)
        if kind == "decimal":
            if not digits:
                return cls(kind=kind, digits=default_digits)
            if not digits.isdigit() or int(digits) < 1:
                raise ValueError(f"Invalid decimal digit count: {digits!r}")
            return cls(kind=kind, digits=int(digits))
        raise ValueError(f"Unknown format: {text!r}")


class CoeffRow(BaseModel):
    """Строка JSON-вывода"""

    k: int = Field(..., description="Индекс коэффициента")
    formula: str = Field(..., description="Имя формулы или all")
    value: str = Field(..., description="Несократимая дробь p/q")
    decimal: str = Field(..., description="Десятичное приближение")
    agree: bool = Field(..., description="Совпадение с остальными формулами")


def format_fraction(value: Fraction) -> str:
    """p/q в несократимом виде; знаменатель 1 опускается"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, digits: int) -> str:
    """Округление до digits значащих цифр, половина - к четному"""
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def render_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def report_rows(report: CoeffReport, digits: int) -> List[CoeffRow]:
    """По строке на каждую формулу отчета"""
    return [
        CoeffRow(
            k=report.k,
            formula=name.value,
            value=format_fraction(value),
            decimal=format_decimal(value, digits),
            agree=report.agree,
        )
        for name, value in report.values.items()
    ]


def summary_row(report: CoeffReport, digits: int) -> CoeffRow:
    """Строка таблицы: эталонное значение и общий вердикт"""
    return CoeffRow(
        k=report.k,
        formula="all",
        value=format_fraction(report.reference),
        decimal=format_decimal(report.reference, digits),
        agree=report.agree,
    )


def single_row(
    k: int, name: FormulaName, value: Fraction, reference: Fraction, digits: int
) -> CoeffRow:
    """Строка для одной формулы; agree - совпадение с рекуррентностью"""
    return CoeffRow(
        k=k,
        formula=name.value,
        value=format_fraction(value),
        decimal=format_decimal(value, digits),
        agree=value == reference,
    )


def render_table_csv(rows: List[CoeffRow]) -> str:
    frame = pd.DataFrame(
        {
            "k": [row.k for row in rows],
            "fraction": [row.value for row in rows],
            "decimal": [row.decimal for row in rows],
            "agree": ["true" if row.agree else "false" for row in rows],
        }
    )
    return frame.to_csv(index=False, lineterminator="\n")
