"""Бенчмарк формул коэффициентов Стирлинга"""

from .models import BenchRecord, VerificationError
from .service import BenchmarkService, render_records, result_digits

__all__ = [
    "BenchRecord",
    "BenchmarkService",
    "VerificationError",
    "render_records",
    "result_digits",
]
