import threading
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

# Универсальный скаляр всех вычислений: несократимая дробь с положительным
# знаменателем, ноль хранится как 0/1
Rational = Fraction


class TriangleKind(str, Enum):
    """Виды треугольников чисел Стирлинга"""

    SECOND_KIND = "second_kind"
    ASSOC3_SECOND_KIND = "assoc3_second_kind"
    ASSOC3_FIRST_KIND = "assoc3_first_kind"


class StirlingTriangle:
    """Треугольная таблица чисел Стирлинга с построчной мемоизацией.

    Строка p хранит значения для q = 0..p. Строки только добавляются, уже
    посчитанные значения не меняются. Расширение таблицы защищено блокировкой,
    поэтому один экземпляр можно использовать из нескольких потоков.
    """

    def __init__(self, kind: TriangleKind):
        self.kind = kind
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()
        self._overrides: Dict[Tuple[int, int], int] = {}

    @property
    def size(self) -> int:
        """Количество уже посчитанных строк"""
        return len(self._rows)

    def value(self, p: int, q: int) -> int:
        """Возвращает элемент (p, q); ноль вне треугольника"""
        if p < 0 or q < 0 or q > p:
            return 0
        override = self._overrides.get((p, q))
        if override is not None:
            return override
        if p >= len(self._rows):
            self._extend_to(p)
        return self._rows[p][q]

    def row(self, p: int) -> Tuple[int, ...]:
        """Возвращает копию строки p"""
        if p < 0:
            raise ValueError(f"Row index must be nonnegative, got {p}")
        return tuple(self.value(p, q) for q in range(p + 1))

    def set_override(self, p: int, q: int, value: int) -> None:
        if not 0 <= q <= p:
            raise ValueError(f"Entry ({p},{q}) lies outside the triangle")
        self._overrides[(p, q)] = value

    def clear_override(self, p: int, q: int) -> None:
        self._overrides.pop((p, q), None)

    def _extend_to(self, p: int) -> None:
        with self._lock:
            while len(self._rows) <= p:
                self._rows.append(self._next_row(len(self._rows)))

    def _raw(self, p: int, q: int) -> int:
        # Рекуррентность читает только сами строки, без подмен
        if p < 0 or q < 0 or q > p:
            return 0
        return self._rows[p][q]

    def _next_row(self, p: int) -> List[int]:
        row = []
        for q in range(p + 1):
            if self.kind == TriangleKind.SECOND_KIND:
                # S(p,q) = q*S(p-1,q) + S(p-1,q-1)
                entry = q * self._raw(p - 1, q) + self._raw(p - 1, q - 1)
            elif self.kind == TriangleKind.ASSOC3_SECOND_KIND:
                # Новый элемент либо добавляется в один из q блоков,
                # либо образует блок вместе с двумя из p-1 прежних
                entry = q * self._raw(p - 1, q) + comb(p - 1, 2) * self._raw(
                    p - 3, q - 1
                )
            else:
                # Новый элемент вставляется в цикл (p-1 позиций) или
                # образует 3-цикл с упорядоченной парой прежних
                entry = (p - 1) * self._raw(p - 1, q) + (p - 1) * (p - 2) * self._raw(
                    p - 3, q - 1
                )
            row.append(entry)
        return row
