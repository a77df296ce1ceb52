"""Точные комбинаторные примитивы: факториалы, биномы, числа Стирлинга"""

import math
import threading
from contextlib import contextmanager
from fractions import Fraction
from typing import Dict, Iterator, Union

from app.logging_config import get_logger
from .models import Rational, StirlingTriangle, TriangleKind

logger = get_logger(__name__)

_triangles: Dict[TriangleKind, StirlingTriangle] = {}
_registry_lock = threading.Lock()


def get_triangle(kind: TriangleKind) -> StirlingTriangle:
    """Возвращает общую мемоизированную таблицу заданного вида"""
    kind = TriangleKind(kind)
    triangle = _triangles.get(kind)
    if triangle is None:
        with _registry_lock:
            triangle = _triangles.setdefault(kind, StirlingTriangle(kind))
    return triangle


def reset_triangles() -> None:
    """Сбрасывает все таблицы - полезно для тестов и бенчмарков"""
    with _registry_lock:
        _triangles.clear()


@contextmanager
def inject_fault(kind: TriangleKind, p: int, q: int, value: int) -> Iterator[None]:
    """Временно подменяет один элемент таблицы (для проверки детектора расхождений)"""
    triangle = get_triangle(kind)
    name = TriangleKind(kind).value
    logger.warning(f"Injecting fault into {name}({p},{q}) = {value}")
    triangle.set_override(p, q, value)
    try:
        yield
    finally:
        triangle.clear_override(p, q)


def _require_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def factorial(n: int) -> int:
    _require_nonnegative(n=n)
    return math.factorial(n)


def double_factorial(m: int) -> int:
    """m!! = m(m-2)(m-4)...; 0!! = 1!! = 1"""
    _require_nonnegative(m=m)
    return math.prod(range(m, 0, -2))


def binomial_rational(alpha: Union[Rational, int, str], m: int) -> Rational:
    """Обобщенный бином alpha(alpha-1)...(alpha-m+1)/m! для рационального alpha"""
    _require_nonnegative(m=m)
    alpha = Fraction(alpha)
    result = Fraction(1)
    for t in range(m):
        result *= alpha - t
    return result / math.factorial(m)


def stirling2(p: int, q: int) -> int:
    """Числа Стирлинга второго рода S(p,q) по треугольной рекуррентности"""
    _require_nonnegative(p=p, q=q)
    return get_triangle(TriangleKind.SECOND_KIND).value(p, q)


def stirling2_explicit(p: int, q: int) -> int:
    """S(p,q) по явной формуле со знакопеременной суммой (0^0 = 1)"""
    _require_nonnegative(p=p, q=q)
    total = sum((-1) ** s * math.comb(q, s) * (q - s) ** p for s in range(q + 1))
    value, remainder = divmod(total, math.factorial(q))
    if remainder:
        raise ArithmeticError(f"Explicit sum for S({p},{q}) is not divisible by {q}!")
    return value


def assoc_stirling2(p: int, q: int) -> int:
    """S_3(p,q): разбиения p-элементного множества на q блоков размера не меньше 3"""
    _require_nonnegative(p=p, q=q)
    return get_triangle(TriangleKind.ASSOC3_SECOND_KIND).value(p, q)


def assoc_stirling1(p: int, q: int) -> int:
    """d_3(p,q): перестановки p элементов из q циклов длины не меньше 3"""
    _require_nonnegative(p=p, q=q)
    return get_triangle(TriangleKind.ASSOC3_FIRST_KIND).value(p, q)
