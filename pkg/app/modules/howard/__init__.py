"""
Движок Ховарда: усеченные ряды в экспоненциальной нормировке, многочлены
Белла и потенциальные многочлены с рациональным показателем.
"""

from .models import (
    FormalPowerSeries,
    PotentialValue,
    TruncationError,
    ZeroLeadingCoefficientError,
)
from .service import (
    bell_polynomial,
    bell_zero_ones,
    g_potential,
    g_potential_stirling,
    potential_polynomial_direct,
    potential_polynomial_howard,
    potential_polynomial_power,
    potential_sequence,
    series_multiply,
    shifted_exponential,
)

__all__ = [
    "FormalPowerSeries",
    "PotentialValue",
    "TruncationError",
    "ZeroLeadingCoefficientError",
    "bell_polynomial",
    "bell_zero_ones",
    "g_potential",
    "g_potential_stirling",
    "potential_polynomial_direct",
    "potential_polynomial_howard",
    "potential_polynomial_power",
    "potential_sequence",
    "series_multiply",
    "shifted_exponential",
]
