from fractions import Fraction

import pytest

from floorparts import kernels
from floorparts.grid import GridSpec

B_SET = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(3, 2), Fraction(-3, 2), Fraction(1, 3)]


@pytest.fixture
def small_grid():
    return GridSpec.exhaustive(2, 6)


@pytest.fixture(params=["numba", "numpy", "exact"])
def each_backend(request):
    prev = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(prev)
