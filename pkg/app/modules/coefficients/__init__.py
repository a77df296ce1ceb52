"""
Коэффициенты Стирлинга a_k: шесть независимых формул и их перекрестная проверка.

Формулы (formulas.py):
- recurrence: через последовательность b_m
- comtet: суммы с числами перестановок d_3
- brassesco_mendez: суммы с 3-ассоциированными числами S_3
- theorem1: через числа Стирлинга второго рода
- corollary: только четыре арифметических действия
- potential: через потенциальные многочлены и теорему Ховарда
"""

from .formulas import (
    BaseFormula,
    coeff_brassesco_mendez,
    coeff_comtet,
    coeff_corollary,
    coeff_recurrence,
    coeff_theorem1,
    coeff_via_potential,
    stirling_b,
)
from .models import CoeffReport, FormulaName
from .service import CoefficientService, verify_all

__all__ = [
    "BaseFormula",
    "CoeffReport",
    "CoefficientService",
    "FormulaName",
    "coeff_brassesco_mendez",
    "coeff_comtet",
    "coeff_corollary",
    "coeff_recurrence",
    "coeff_theorem1",
    "coeff_via_potential",
    "stirling_b",
    "verify_all",
]
