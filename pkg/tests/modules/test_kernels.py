"""
Тесты комбинаторных ядер: факториалы, биномы и треугольники чисел Стирлинга
"""

import math
import threading
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.modules.kernels.models import StirlingTriangle, TriangleKind
from app.modules.kernels.oracles import (
    count_permutations,
    count_set_partitions,
    cycle_lengths,
    set_partitions,
)
from app.modules.kernels.service import (
    assoc_stirling1,
    assoc_stirling2,
    binomial_rational,
    double_factorial,
    factorial,
    get_triangle,
    inject_fault,
    stirling2,
    stirling2_explicit,
)


class TestFactorials:
    """Тесты факториалов и двойных факториалов"""

    @pytest.mark.parametrize(
        "n, expected", [(0, 1), (5, 120), (20, 2432902008176640000)]
    )
    def test_factorial(self, n, expected):
        """Тест факториала на опорных значениях"""
        assert factorial(n) == expected

    def test_factorial_matches_iterated_product(self):
        """Тест факториала против последовательного умножения"""
        product = 1
        for n in range(1, 40):
            product *= n
            assert factorial(n) == product

    @pytest.mark.parametrize(
        "m, expected", [(0, 1), (1, 1), (5, 15), (8, 384), (9, 945)]
    )
    def test_double_factorial(self, m, expected):
        """Тест двойного факториала"""
        assert double_factorial(m) == expected

    def test_negative_arguments_rejected(self):
        """Тест отказа на отрицательных аргументах"""
        with pytest.raises(ValueError):
            factorial(-1)
        with pytest.raises(ValueError):
            double_factorial(-3)


class TestBinomialRational:
    """Тесты обобщенного бинома"""

    @pytest.mark.parametrize(
        "alpha, m, expected",
        [
            (Fraction(1, 2), 0, Fraction(1)),
            (Fraction(1, 2), 1, Fraction(1, 2)),
            (Fraction(3, 2), 2, Fraction(3, 8)),
            (Fraction(-1, 2), 2, Fraction(3, 8)),
            (Fraction(1, 2), 3, Fraction(1, 16)),
        ],
    )
    def test_examples(self, alpha, m, expected):
        """Тест опорных значений"""
        assert binomial_rational(alpha, m) == expected

    def test_accepts_strings_and_ints(self):
        """Тест приведения аргумента к дроби"""
        assert binomial_rational("7/2", 2) == Fraction(35, 8)
        assert binomial_rational(6, 3) == 20

    @given(st.integers(min_value=0, max_value=40), st.data())
    def test_integer_argument_matches_comb(self, n, data):
        """Тест совпадения с обычным биномом при целом аргументе"""
        m = data.draw(st.integers(min_value=0, max_value=n))
        assert binomial_rational(n, m) == math.comb(n, m)

    @given(
        st.fractions(min_value=-20, max_value=20, max_denominator=50),
        st.integers(min_value=0, max_value=12),
    )
    def test_canonical_form(self, alpha, m):
        """Тест несократимости результата и положительного знаменателя"""
        value = binomial_rational(alpha, m)
        assert value.denominator > 0
        assert math.gcd(value.numerator, value.denominator) == 1

    def test_negative_m_rejected(self):
        """Тест отказа на отрицательном m"""
        with pytest.raises(ValueError):
            binomial_rational(Fraction(1, 2), -1)


class TestStirlingSecondKind:
    """Тесты чисел Стирлинга второго рода"""

    @pytest.mark.parametrize(
        "p, q, expected", [(4, 2, 7), (5, 3, 25), (0, 0, 1), (6, 2, 31)]
    )
    def test_examples(self, p, q, expected):
        """Тест опорных значений"""
        assert stirling2(p, q) == expected

    def test_diagonal(self):
        """Тест S(p, p) = 1"""
        for p in range(30):
            assert stirling2(p, p) == 1

    def test_outside_triangle_is_zero(self):
        """Тест нулей вне треугольника"""
        assert stirling2(3, 5) == 0
        assert stirling2(4, 0) == 0

    @pytest.mark.parametrize("p, q, expected", [(4, 2, 7), (0, 0, 1), (3, 5, 0)])
    def test_explicit_examples(self, p, q, expected):
        """Тест явной формулы на опорных значениях"""
        assert stirling2_explicit(p, q) == expected

    def test_explicit_matches_recurrence(self):
        """Тест совпадения явной формулы и рекуррентности при p <= 25"""
        for p in range(26):
            for q in range(p + 1):
                assert stirling2(p, q) == stirling2_explicit(p, q), (p, q)

    @pytest.mark.slow
    def test_matches_enumeration(self):
        """Тест против перебора разбиений множества при p <= 10"""
        for p in range(11):
            counts = count_set_partitions(p)
            for q in range(p + 1):
                assert stirling2(p, q) == counts.get(q, 0), (p, q)

    def test_negative_arguments_rejected(self):
        """Тест отказа на отрицательных аргументах"""
        with pytest.raises(ValueError):
            stirling2(-1, 0)
        with pytest.raises(ValueError):
            stirling2_explicit(2, -1)


class TestAssociatedNumbers:
    """Тесты 3-ассоциированных чисел Стирлинга обоих родов"""

    @pytest.mark.parametrize(
        "p, q, expected", [(6, 2, 10), (3, 1, 1), (7, 2, 35), (0, 0, 1)]
    )
    def test_second_kind_examples(self, p, q, expected):
        """Тест S_3 на опорных значениях"""
        assert assoc_stirling2(p, q) == expected

    @pytest.mark.parametrize(
        "p, q, expected", [(3, 1, 2), (6, 2, 40), (5, 2, 0), (0, 0, 1)]
    )
    def test_first_kind_examples(self, p, q, expected):
        """Тест d_3 на опорных значениях"""
        assert assoc_stirling1(p, q) == expected

    def test_vanish_below_3q(self):
        """Тест нулей при p < 3q"""
        for q in range(1, 12):
            for p in range(3 * q):
                assert assoc_stirling2(p, q) == 0, (p, q)
                assert assoc_stirling1(p, q) == 0, (p, q)

    @pytest.mark.slow
    def test_second_kind_matches_enumeration(self):
        """Тест S_3 против перебора разбиений с блоками не меньше 3, p <= 10"""
        for p in range(11):
            counts = count_set_partitions(p, min_block=3)
            for q in range(p + 1):
                assert assoc_stirling2(p, q) == counts.get(q, 0), (p, q)

    @pytest.mark.slow
    def test_first_kind_matches_enumeration(self):
        """Тест d_3 против перебора перестановок с циклами не короче 3, p <= 8"""
        for p in range(9):
            counts = count_permutations(p, min_cycle=3)
            for q in range(p + 1):
                assert assoc_stirling1(p, q) == counts.get(q, 0), (p, q)


class TestOracles:
    """Тесты переборных оракулов"""

    def test_set_partitions_count_is_bell_number(self):
        """Тест числа разбиений: числа Белла 1, 1, 2, 5, 15, 52"""
        bell_numbers = [1, 1, 2, 5, 15, 52]
        for p, expected in enumerate(bell_numbers):
            assert sum(1 for _ in set_partitions(list(range(p)))) == expected

    def test_set_partitions_cover_elements(self):
        """Тест что каждое разбиение покрывает все элементы ровно один раз"""
        for partition in set_partitions([1, 2, 3, 4]):
            assert sorted(x for block in partition for x in block) == [1, 2, 3, 4]

    def test_cycle_lengths(self):
        """Тест разложения перестановки на циклы"""
        assert sorted(cycle_lengths((1, 2, 0, 4, 3, 5))) == [1, 2, 3]
        assert cycle_lengths(()) == []

    @given(st.permutations(list(range(7))))
    def test_cycle_lengths_sum_to_size(self, permutation):
        """Тест что длины циклов в сумме дают размер перестановки"""
        assert sum(cycle_lengths(permutation)) == 7

    def test_count_permutations_totals(self):
        """Тест что сумма по q равна p!"""
        for p in range(7):
            assert sum(count_permutations(p).values()) == math.factorial(p)


class TestStirlingTriangle:
    """Тесты мемоизированной таблицы"""

    def test_rows_are_only_appended(self):
        """Тест роста таблицы по мере запросов"""
        triangle = StirlingTriangle(TriangleKind.SECOND_KIND)
        assert triangle.size == 1
        assert triangle.value(5, 2) == 15
        assert triangle.size == 6
        assert triangle.row(3) == (0, 1, 3, 1)

    def test_negative_row_rejected(self):
        """Тест отказа на отрицательном номере строки"""
        with pytest.raises(ValueError):
            StirlingTriangle(TriangleKind.SECOND_KIND).row(-1)

    def test_shared_registry(self, fresh_triangles):
        """Тест что реестр возвращает один экземпляр на вид"""
        first = get_triangle(TriangleKind.ASSOC3_FIRST_KIND)
        assert get_triangle("assoc3_first_kind") is first

    def test_concurrent_extension(self, fresh_triangles):
        """Тест согласованности таблицы при одновременном расширении из потоков"""
        triangle = get_triangle(TriangleKind.ASSOC3_SECOND_KIND)
        results = {}

        def worker(index):
            results[index] = [triangle.value(40 - index, q) for q in range(14)]

        threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        reference = StirlingTriangle(TriangleKind.ASSOC3_SECOND_KIND)
        for index, values in results.items():
            assert values == [reference.value(40 - index, q) for q in range(14)]

    def test_inject_fault_is_temporary(self, fresh_triangles):
        """Тест что подмена элемента действует только внутри контекста"""
        assert assoc_stirling2(6, 2) == 10
        with inject_fault(TriangleKind.ASSOC3_SECOND_KIND, 6, 2, 11):
            assert assoc_stirling2(6, 2) == 11
            # Подмена не распространяется на следующие строки
            assert assoc_stirling2(9, 3) == 280
        assert assoc_stirling2(6, 2) == 10

    @pytest.mark.parametrize("p, q", [(2, 5), (-1, 0), (4, -2)])
    def test_inject_fault_outside_triangle(self, fresh_triangles, p, q):
        """Тест отказа подменить элемент вне треугольника"""
        with pytest.raises(ValueError):
            with inject_fault(TriangleKind.SECOND_KIND, p, q, 9):
                pass
        assert stirling2(2, 1) == 1
