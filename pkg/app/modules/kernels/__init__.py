"""
Комбинаторные ядра: факториалы, обобщенные биномы, треугольники чисел
Стирлинга второго рода и 3-ассоциированных чисел обоих родов.
"""

from .models import Rational, StirlingTriangle, TriangleKind
from .service import (
    assoc_stirling1,
    assoc_stirling2,
    binomial_rational,
    double_factorial,
    factorial,
    get_triangle,
    inject_fault,
    reset_triangles,
    stirling2,
    stirling2_explicit,
)

__all__ = [
    "Rational",
    "StirlingTriangle",
    "TriangleKind",
    "assoc_stirling1",
    "assoc_stirling2",
    "binomial_rational",
    "double_factorial",
    "factorial",
    "get_triangle",
    "inject_fault",
    "reset_triangles",
    "stirling2",
    "stirling2_explicit",
]
