from math import factorial

import pytest
from hypothesis import strategies as st

from qbinomial.models.laurent import LaurentPoly


GRID = range(-12, 13)
NK_POINTS = [(n, k) for n in GRID for k in GRID]


def binomial_by_factorials(n: int, k: int) -> int:
    if not 0 <= k <= n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def integer_negative_binomial(n: int, k: int) -> int:
    """Независимая целочисленная версия (q = 1) трёх случаев для отрицательного n."""
    if n >= 0:
        return binomial_by_factorials(n, k)
    if k >= 0:
        return (-1) ** k * binomial_by_factorials(-n + k - 1, k)
    if k <= n:
        return (-1) ** (n - k) * binomial_by_factorials(-k - 1, n - k)
    return 0


def poly(*pairs: tuple[int, int]) -> LaurentPoly:
    return LaurentPoly.from_terms(pairs)


laurent_polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-20, max_value=20),
    max_size=5,
).map(LaurentPoly)

nonzero_laurent_polys = laurent_polys.filter(lambda p: not p.is_zero)

nonzero_points = st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(lambda f: f != 0)


@pytest.fixture
def gauss_4_2() -> LaurentPoly:
    return poly((0, 1), (1, 1), (2, 2), (3, 1), (4, 1))


@pytest.fixture
def gauss_minus3_minus5() -> LaurentPoly:
    return poly((-7, 1), (-6, 1), (-5, 2), (-4, 1), (-3, 1))
