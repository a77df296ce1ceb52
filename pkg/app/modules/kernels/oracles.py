"""Переборные оракулы для проверки рекуррентностей.

Экспоненциальные по времени: рассчитаны на p <= 10 для разбиений и p <= 8
для перестановок.
"""

from collections import Counter
from itertools import permutations
from typing import Dict, Iterator, List, Sequence


def set_partitions(elements: Sequence[int]) -> Iterator[List[List[int]]]:
    """Перечисляет все разбиения множества на непустые блоки"""
    if not elements:
        yield []
        return

    first, rest = elements[0], elements[1:]
    for smaller in set_partitions(rest):
        # Вставляем первый элемент в каждый из блоков меньшего разбиения
        for n, block in enumerate(smaller):
            yield smaller[:n] + [[first] + block] + smaller[n + 1 :]
        # Или выделяем его в отдельный блок
        yield [[first]] + smaller


def count_set_partitions(p: int, min_block: int = 1) -> Dict[int, int]:
    """Число разбиений {1..p} на q блоков размера >= min_block, по q"""
    counts: Counter = Counter()
    for partition in set_partitions(list(range(p))):
        if all(len(block) >= min_block for block in partition):
            counts[len(partition)] += 1
    return dict(counts)


def cycle_lengths(permutation: Sequence[int]) -> List[int]:
    """Длины циклов перестановки, заданной как i -> permutation[i]"""
    seen = [False] * len(permutation)
    lengths = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        length = 0
        current = start
        while not seen[current]:
            seen[current] = True
            current = permutation[current]
            length += 1
        lengths.append(length)
    return lengths


def count_permutations(p: int, min_cycle: int = 1) -> Dict[int, int]:
    """Число перестановок p элементов из q циклов длины >= min_cycle, по q"""
    counts: Counter = Counter()
    for permutation in permutations(range(p)):
        lengths = cycle_lengths(permutation)
        if all(length >= min_cycle for length in lengths):
            counts[len(lengths)] += 1
    return dict(counts)
