from fractions import Fraction

import pytest
from pydantic import ValidationError

from qbinomial.exceptions import InvalidRange
from qbinomial.models.xseries import XSeries
from qbinomial.schemas import (
    FailureSchema,
    GridSpec,
    IdentityReport,
    IntRange,
    LaurentPolySchema,
    RationalSchema,
    XSeriesSchema,
)

from tests.conftest import poly


@pytest.mark.parametrize("text, lo, hi", [("0..6", 0, 6), ("-3..3", -3, 3), ("5..5", 5, 5), ("-12..-2", -12, -2)])
def test_int_range_parse(text, lo, hi):
    parsed = IntRange.parse(text)
    assert (parsed.lo, parsed.hi) == (lo, hi)
    assert list(parsed.values()) == list(range(lo, hi + 1))


@pytest.mark.parametrize("text", ["6", "0-6", "a..b", "3..1", "..4", "1...3"])
def test_int_range_rejects_malformed(text):
    with pytest.raises(InvalidRange):
        IntRange.parse(text)


def test_int_range_validator():
    with pytest.raises(ValidationError):
        IntRange(lo=2, hi=1)


def test_grid_points_and_override():
    grid = GridSpec(ranges={"a": IntRange(lo=0, hi=1), "b": IntRange(lo=5, hi=6)})
    assert list(grid.points()) == [{"a": 0, "b": 5}, {"a": 0, "b": 6}, {"a": 1, "b": 5}, {"a": 1, "b": 6}]

    narrowed = grid.override({"b": IntRange(lo=2, hi=2)})
    assert list(narrowed.points()) == [{"a": 0, "b": 2}, {"a": 1, "b": 2}]
    assert list(narrowed.ranges) == ["a", "b"]

    with pytest.raises(InvalidRange):
        grid.override({"k": IntRange(lo=0, hi=1)})


def test_laurent_poly_schema(gauss_minus3_minus5):
    schema = LaurentPolySchema.from_poly(gauss_minus3_minus5)
    assert [term.exp for term in schema.terms] == [-7, -6, -5, -4, -3]
    assert schema.terms[2].coeff == "2"
    restored = LaurentPolySchema.model_validate_json(schema.model_dump_json()).to_poly()
    assert restored.to_text() == gauss_minus3_minus5.to_text()


def test_big_coefficients_survive_json():
    big = poly((0, 10**40), (3, -(10**40)))
    restored = LaurentPolySchema.model_validate_json(LaurentPolySchema.from_poly(big).model_dump_json()).to_poly()
    assert restored == big


def test_rational_and_series_schemas():
    assert RationalSchema.from_fraction(Fraction(-35, 16)).model_dump() == {"numerator": "-35", "denominator": "16"}
    series = XSeries.from_coeffs([poly((0, 1)), poly((0, 1), (1, 1)), poly((1, 1))])
    dumped = XSeriesSchema.from_series(series)
    assert dumped.order == 2
    assert [c.to_poly() for c in dumped.coeffs] == list(series.coeffs)


def test_identity_report_text():
    grid = GridSpec(ranges={"n": IntRange(lo=0, hi=2)})
    report = IdentityReport(
        identity="negdef",
        grid=grid,
        checked=3,
        failures=[FailureSchema(params={"n": 1, "k": 0}, lhs="2", rhs="1")],
    )
    assert not report.passed
    assert report.to_text() == "negdef: checked 3, failures 1\n  n=1, k=0: 2 != 1"

    clean = IdentityReport(identity="zeros", grid=grid, checked=3, informational=True)
    assert clean.passed
    assert clean.to_text() == "zeros: checked 3, failures 0 (informational)"
