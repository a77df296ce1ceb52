from fractions import Fraction

import pytest

from app.config import CoefficientSettings
from app.modules.coefficients.service import CoefficientService
from app.modules.howard.models import FormalPowerSeries
from app.modules.howard.service import shifted_exponential
from app.modules.kernels.service import reset_triangles

# a_0..a_6 - классические значения коэффициентов Стирлинга
KNOWN_COEFFICIENTS = {
    0: Fraction(1),
    1: Fraction(1, 12),
    2: Fraction(1, 288),
    3: Fraction(-139, 51840),
    4: Fraction(-571, 2488320),
    5: Fraction(163879, 209018880),
    6: Fraction(5246819, 75246796800),
}


@pytest.fixture
def known_coefficients():
    return dict(KNOWN_COEFFICIENTS)


@pytest.fixture
def fresh_triangles():
    """Пустые таблицы чисел Стирлинга до и после теста"""
    reset_triangles()
    yield
    reset_triangles()


@pytest.fixture
def sequential_service():
    return CoefficientService(CoefficientSettings(parallel=False))


@pytest.fixture
def parallel_service():
    return CoefficientService(CoefficientSettings(parallel=True, max_workers=6))


@pytest.fixture
def shifted_exp():
    """e^x - x - 1 до абсолютного индекса 22"""
    return shifted_exponential(20)


@pytest.fixture
def generic_series():
    """Ряд общего вида с валюацией 1 и ненулевыми коэффициентами разных знаков"""
    return FormalPowerSeries(
        1, tuple(Fraction((-1) ** j * (j + 2), j + 1) for j in range(14))
    )
