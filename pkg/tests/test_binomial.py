from fractions import Fraction

import pytest

from qbinomial import binomial
from qbinomial.binomial import (
    QBinomArgs,
    Transform,
    absorption_sides,
    check_absorption,
    check_symmetry,
    is_zero_region,
    qbinom,
    qbinom_oracle,
    reciprocal,
    symmetry_sides,
    trans1,
    trans2,
)
from qbinomial.config import ORACLE_CACHE_SIZE
from qbinomial.exceptions import ExponentOverflow, NegativeLength
from qbinomial.models.laurent import ONE, ZERO, LaurentPoly

from tests.conftest import NK_POINTS, integer_negative_binomial, poly


def test_oracle_examples(gauss_4_2):
    assert qbinom_oracle(4, 2) == gauss_4_2
    assert qbinom_oracle(5, 0) == ONE
    assert qbinom_oracle(3, 5) == ZERO
    assert qbinom_oracle(2, 1) == poly((0, 1), (1, 1))
    assert qbinom_oracle(-1, 1) == poly((-1, -1))


def test_qbinom_examples(gauss_4_2, gauss_minus3_minus5):
    assert qbinom(4, 2) == gauss_4_2
    assert qbinom(-3, 2) == gauss_minus3_minus5
    assert qbinom(-3, -5) == gauss_minus3_minus5
    assert qbinom(-1, 2) == LaurentPoly.monomial(-3)
    assert qbinom(-1, -3) == LaurentPoly.monomial(-3)
    assert qbinom(-3, -1) == ZERO
    assert qbinom(5, -1) == ZERO


def test_transforms():
    assert trans1(-3, 2) == Transform(1, -7, QBinomArgs(4, 2))
    assert trans1(2, 1) == Transform(-1, 2, QBinomArgs(-2, 1))
    assert trans2(1, 0) == Transform(-1, 1, QBinomArgs(-1, 1))
    assert trans2(-3, -5) == Transform(1, -7, QBinomArgs(4, 2))
    with pytest.raises(NegativeLength):
        trans1(3, -1)
    with pytest.raises(NegativeLength):
        trans2(-3, -2)


def test_reciprocal_example():
    assert reciprocal(4, 2) == poly((-4, 1), (-3, 1), (-2, 2), (-1, 1), (0, 1))


@pytest.mark.parametrize("n, k", NK_POINTS)
def test_definition_matches_product_formula(n, k):
    assert qbinom(n, k) == qbinom_oracle(n, k)


@pytest.mark.parametrize("n, k", NK_POINTS)
def test_symmetry_and_absorption(n, k):
    assert check_symmetry(n, k)
    assert check_absorption(n, k)


@pytest.mark.parametrize("n, k", NK_POINTS)
def test_zero_regions(n, k):
    assert qbinom(n, k).is_zero == is_zero_region(n, k)


@pytest.mark.parametrize("n, k", NK_POINTS)
def test_self_reciprocity(n, k):
    value = qbinom(n, k)
    assert reciprocal(n, k) == value.shift(-k * (n - k))
    if k >= 0:
        sign, exp, args = trans1(n, k)
        assert reciprocal(n, k) == reciprocal(*args).shift(-exp) * sign
    if k <= n:
        sign, exp, args = trans2(n, k)
        assert reciprocal(n, k) == reciprocal(*args).shift(-exp) * sign


@pytest.mark.parametrize("n, k", NK_POINTS)
def test_specialization_at_one(n, k):
    assert qbinom(n, k).evaluate(1) == integer_negative_binomial(n, k)


@pytest.mark.parametrize("n", range(13))
def test_nonnegative_shape(n):
    for k in range(n + 1):
        value = qbinom(n, k)
        assert value.valuation_degree() == (0, k * (n - k))
        assert all(coeff > 0 for _, coeff in value.items())
        assert value == value.substitute_qinv().shift(k * (n - k))


@pytest.mark.parametrize("k", range(-8, 9))
def test_minus_one_closed_form(k):
    sign = (-1) ** k if k >= 0 else (-1) ** (k + 1)
    assert qbinom(-1, k) == LaurentPoly.monomial(-k * (k + 1) // 2, sign)


def test_absorption_sides_example():
    lhs, rhs = absorption_sides(-3, 0)
    assert lhs == rhs == ZERO


def test_oracle_is_cached():
    binomial.qbinom_oracle.cache_clear()
    qbinom_oracle(7, 3)
    qbinom_oracle(7, 3)
    assert binomial.qbinom_oracle.cache_info().hits >= 1


def test_exponent_overflow():
    with pytest.raises(ExponentOverflow):
        qbinom(2**63, 1)
    with pytest.raises(ExponentOverflow):
        qbinom(-(2**62), 4)


def test_value_at_two():
    assert qbinom(4, 2).evaluate(2) == 35
    assert qbinom(-3, 2).evaluate(Fraction(1, 1)) == 6


def test_zero_region_is_immediate():
    assert qbinom(0, 10**6) == ZERO
    assert qbinom(3, 1500) == ZERO
    assert qbinom(-(10**6), -3) == ZERO
    assert qbinom_oracle(0, 10**6) == ZERO
    assert qbinom_oracle(3, 1500) == ZERO
    assert qbinom_oracle(3, -1500) == ZERO


def test_oracle_cache_is_bounded():
    assert binomial.qbinom_oracle.cache_info().maxsize == ORACLE_CACHE_SIZE


def test_symmetry_sides():
    lhs, rhs = symmetry_sides(5, 2)
    assert lhs == rhs == qbinom(5, 3)
    assert symmetry_sides(-3, 2) == (qbinom(-3, 2), qbinom(-3, -5))
