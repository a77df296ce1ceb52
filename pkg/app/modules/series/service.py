"""Вычисление усеченного ряда Стирлинга с высокой точностью"""

from fractions import Fraction
from typing import List, Optional

import mpmath
from mpmath import MPContext

from app.config import settings
from app.logging_config import get_logger
from app.modules.coefficients.formulas import coeff_recurrence
from app.modules.kernels.service import factorial
from .models import ApproxResult, HighPrecisionNumber, PrecisionError, TruncationResult

logger = get_logger(__name__)

MIN_PRECISION = 10


def exact_factorial(n: int) -> int:
    return factorial(n)


def _working_context(precision: int) -> MPContext:
    # Отдельный контекст на вызов: глобальный mpmath.mp не потокобезопасен
    ctx = MPContext()
    ctx.dps = precision + settings.series.guard_digits
    return ctx


def _to_mpf(ctx: MPContext, value: Fraction) -> HighPrecisionNumber:
    return ctx.mpf(value.numerator) / value.denominator


def _validate(n: int, precision: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if precision < MIN_PRECISION:
        raise PrecisionError(
            f"Precision must be at least {MIN_PRECISION} digits, got {precision}"
        )


def _relative_terms(n: int, coefficients: List[Fraction]) -> List[Fraction]:
    """a_k / n^k точно"""
    return [a / Fraction(n) ** k for k, a in enumerate(coefficients)]


def _resolvable(term: Fraction, precision: int) -> bool:
    return term == 0 or abs(term) >= Fraction(1, 10**precision)


def stirling_approx(n: int, m: int, precision: Optional[int] = None) -> ApproxResult:
    """n^n e^{-n} sqrt(2 pi n) sum_{k<m} a_k/n^k против точного n!.

    Сумма по коэффициентам накапливается точно в рациональных числах;
    иррациональные множители входят только на последнем шаге.
    """
    if precision is None:
        precision = settings.series.default_precision
    _validate(n, precision)
    if m < 1:
        raise ValueError(f"Term count must be positive, got {m}")

    terms = _relative_terms(n, [coeff_recurrence(k) for k in range(m)])
    smallest = abs(terms[-1])
    if m > 1 and not _resolvable(smallest, precision):
        raise PrecisionError(
            f"Term a_{m - 1}/n^{m - 1} ~ {float(smallest):.3e} is below the resolution "
            f"of {precision} digits; increase precision"
        )

    ctx = _working_context(precision)
    leading = ctx.mpf(n) ** n * ctx.exp(-n) * ctx.sqrt(2 * ctx.pi * n)
    approx = leading * _to_mpf(ctx, sum(terms, Fraction(0)))
    exact = exact_factorial(n)
    rel_error = ctx.fabs(approx - exact) / exact

    logger.debug(f"n={n}, m={m}, P={precision}: rel_error={mpmath.nstr(rel_error, 6)}")
    return ApproxResult(
        n=n,
        terms_used=m,
        precision=precision,
        approx=approx,
        exact=exact,
        rel_error=rel_error,
        term_magnitudes=[_to_mpf(ctx, abs(term)) for term in terms],
    )


def optimal_truncation(
    n: int, k_max: int, precision: Optional[int] = None
) -> TruncationResult:
    """Число членов m <= k_max с минимальной относительной ошибкой"""
    if precision is None:
        precision = settings.series.default_precision
    _validate(n, precision)
    if k_max < 2:
        raise ValueError(f"k_max must be at least 2, got {k_max}")

    # Перебор обрывается на первом члене, неразличимом на точности P
    terms = _relative_terms(n, [coeff_recurrence(k) for k in range(k_max)])
    m_limit = 1
    while m_limit < k_max and _resolvable(terms[m_limit], precision):
        m_limit += 1
    if m_limit < k_max:
        logger.info(
            f"n={n}: term a_{m_limit}/n^{m_limit} is below {precision} digits, "
            f"scan stops at m={m_limit}"
        )

    results = [stirling_approx(n, m, precision) for m in range(1, m_limit + 1)]
    errors = [result.rel_error for result in results]

    best_index = 0
    for index, error in enumerate(errors):
        if error < errors[best_index]:
            best_index = index

    logger.info(f"Optimal truncation for n={n}: m*={best_index + 1} of {k_max}")
    return TruncationResult(
        n=n,
        k_max=k_max,
        m_star=best_index + 1,
        m_limit=m_limit,
        best_error=errors[best_index],
        errors=errors,
        term_magnitudes=results[-1].term_magnitudes,
    )


def format_error(value: HighPrecisionNumber, digits: Optional[int] = None) -> str:
    """Научная запись с заданным числом значащих цифр"""
    digits = digits or settings.series.error_digits
    return mpmath.nstr(value, digits, strip_zeros=False, min_fixed=0, max_fixed=0)
