"""Усеченный ряд Стирлинга: вычисление, сравнение с n! и оптимальное усечение"""

from .models import ApproxResult, PrecisionError, TruncationResult
from .service import exact_factorial, optimal_truncation, stirling_approx

__all__ = [
    "ApproxResult",
    "PrecisionError",
    "TruncationResult",
    "exact_factorial",
    "optimal_truncation",
    "stirling_approx",
]
