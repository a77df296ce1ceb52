"""Арифметика усеченных рядов, многочлены Белла и потенциальные многочлены"""

from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Union

from app.logging_config import get_logger
from app.modules.kernels.service import binomial_rational, stirling2
from .models import FormalPowerSeries, PotentialValue, TruncationError

logger = get_logger(__name__)

RationalLike = Union[Fraction, int, str]


def shifted_exponential(order: int) -> FormalPowerSeries:
    """e^x - x - 1: валюация 2, все коэффициенты a_j = 1"""
    return FormalPowerSeries(2, (Fraction(1),) * (order + 1))


def series_multiply(
    f: FormalPowerSeries, g: FormalPowerSeries, order: Optional[int] = None
) -> FormalPowerSeries:
    """Произведение рядов в экспоненциальной нормировке (биномиальная свертка)"""
    if order is None:
        if f.order != g.order:
            raise TruncationError(
                f"Truncation orders differ: {f.order} and {g.order}; "
                "pass order explicitly"
            )
        order = f.order
    elif order > f.order or order > g.order:
        raise TruncationError(
            f"Product of order {order} needs both factors of at least that order, "
            f"got {f.order} and {g.order}"
        )

    valuation = f.valuation + g.valuation
    coeffs = []
    for t in range(order + 1):
        n = valuation + t
        total = Fraction(0)
        for a in range(t + 1):
            total += comb(n, f.valuation + a) * f.coeffs[a] * g.coeffs[t - a]
        coeffs.append(total)
    return FormalPowerSeries(valuation, tuple(coeffs))


def _power(series: FormalPowerSeries, i: int) -> FormalPowerSeries:
    result = FormalPowerSeries.one(series.order)
    for _ in range(i):
        result = series_multiply(result, series)
    return result


def bell_polynomial(series: FormalPowerSeries, n: int, i: int) -> Fraction:
    """B_{n,i}(0,...,0,a_r,a_{r+1},...): F^i = i! sum B_{n,i} x^n/n!"""
    if n < 0 or i < 0:
        raise ValueError(f"n and i must be nonnegative, got n={n}, i={i}")
    if i == 0:
        return Fraction(1 if n == 0 else 0)

    # F^i начинается с x^{ri}; для коэффициента n нужен относительный порядок n - ri
    relative = n - series.valuation * i
    if relative < 0:
        return Fraction(0)
    if relative > series.order:
        raise TruncationError(
            f"B_{{{n},{i}}} needs the series up to index "
            f"{series.valuation + relative}, known up to {series.top}"
        )
    power = _power(series.truncate(relative), i)
    return power.coefficient(n) / factorial(i)


def bell_zero_ones(n: int, i: int) -> Fraction:
    """B_{n,i}(0,1,1,...) через числа Стирлинга второго рода"""
    if n < 0 or i < 0:
        raise ValueError(f"n and i must be nonnegative, got n={n}, i={i}")
    total = Fraction(0)
    for j in range(i + 1):
        m = n - i + j
        if m < 0:
            # таких мономов в разложении нет
            continue
        total += Fraction(
            comb(i, j) * (-1) ** (i - j) * factorial(j) * stirling2(m, j), factorial(m)
        )
    return total * Fraction(factorial(n), factorial(i))


def _check_budget(series: FormalPowerSeries, n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > series.order:
        raise TruncationError(
            f"F_{n} needs truncation order at least {n}, "
            f"series has order {series.order}"
        )


def potential_polynomial_howard(
    series: FormalPowerSeries, n: int, z: RationalLike
) -> Fraction:
    """F_n^{(z)} по теореме Ховарда через многочлены Белла B_{n+ri,i}"""
    if series.valuation < 1:
        raise ValueError("Howard's formula needs a series of valuation r >= 1")
    _check_budget(series, n)

    z = Fraction(z)
    r = series.valuation
    scale = Fraction(factorial(r)) / series.leading
    base = series.truncate(n)

    total = Fraction(0)
    power = FormalPowerSeries.one(n)
    for i in range(n + 1):
        if i > 0:
            power = series_multiply(power, base)
        # B_{n+ri,i} = [x^{n+ri}/(n+ri)!] F^i / i!
        bell = power.coefficient(n + r * i) / factorial(i)
        if bell == 0:
            continue
        term = (
            binomial_rational(z + i - 1, i)
            * binomial_rational(z + n, n - i)
            * scale**i
            * Fraction(factorial(n) * factorial(i), factorial(n + r * i))
            * bell
        )
        total += -term if i % 2 else term
    return total


def _unit_quotient(series: FormalPowerSeries, n: int) -> List[Fraction]:
    """Обычные коэффициенты h_0..h_n ряда F(x) / (a_r x^r / r!), h_0 = 1"""
    r = series.valuation
    return [
        series.coeffs[t] * factorial(r) / (series.leading * factorial(r + t))
        for t in range(n + 1)
    ]


def _ordinary_multiply(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    return [
        sum((a[k] * b[m - k] for k in range(m + 1)), Fraction(0))
        for m in range(len(a))
    ]


def potential_polynomial_direct(series: FormalPowerSeries, n: int, z: int) -> Fraction:
    """F_n^{(z)} для целого z >= 0 обращением ряда и возведением в степень"""
    if isinstance(z, Fraction):
        if z.denominator != 1:
            raise ValueError(f"Direct evaluation needs an integer exponent, got {z}")
        z = int(z)
    if z < 0:
        raise ValueError(f"Exponent must be nonnegative, got {z}")
    _check_budget(series, n)

    h = _unit_quotient(series, n)
    # Треугольное решение h * inverse = 1
    inverse = [Fraction(1)]
    for m in range(1, n + 1):
        inverse.append(
            -sum((h[k] * inverse[m - k] for k in range(1, m + 1)), Fraction(0))
        )

    result = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(z):
        result = _ordinary_multiply(result, inverse)
    return result[n] * factorial(n)


def potential_polynomial_power(
    series: FormalPowerSeries, n: int, z: RationalLike
) -> Fraction:
    """F_n^{(z)} для рационального z рекуррентностью для степени ряда.

    Для P = H^alpha с H(0) = 1: p_m = (1/m) sum_{k=1..m} ((alpha+1)k - m) h_k p_{m-k},
    здесь H = F / (a_r x^r / r!) и alpha = -z.
    """
    _check_budget(series, n)
    alpha = -Fraction(z)
    h = _unit_quotient(series, n)
    p = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(1, m + 1):
            acc += ((alpha + 1) * k - m) * h[k] * p[m - k]
        p.append(acc / m)
    return p[n] * factorial(n)


def potential_sequence(
    series: FormalPowerSeries, n_max: int, z: RationalLike
) -> List[PotentialValue]:
    """F_0^{(z)} .. F_{n_max}^{(z)} по теореме Ховарда"""
    z = Fraction(z)
    return [
        PotentialValue(n=n, z=z, value=potential_polynomial_howard(series, n, z))
        for n in range(n_max + 1)
    ]


def g_potential(n: int, z: RationalLike) -> Fraction:
    """G_n^{(z)}: коэффициенты (x^2/2 / (e^x - x - 1))^z"""
    value = potential_polynomial_howard(shifted_exponential(n), n, z)
    logger.debug(f"G_{n}^({z}) = {value}")
    return value


def g_potential_stirling(n: int, z: RationalLike) -> Fraction:
    """G_n^{(z)} в форме с числами Стирлинга второго рода (знак (-1)^j внутри)"""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    z = Fraction(z)
    total = Fraction(0)
    for i in range(n + 1):
        inner = Fraction(0)
        for j in range(i + 1):
            m = n + i + j
            inner += Fraction(
                comb(i, j) * (-1) ** j * factorial(j) * stirling2(m, j), factorial(m)
            )
        total += (
            binomial_rational(z + i - 1, i)
            * binomial_rational(z + n, n - i)
            * 2**i
            * inner
        )
    return total * factorial(n)
