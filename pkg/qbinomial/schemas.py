import itertools
from collections.abc import Iterator
from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from qbinomial.exceptions import InvalidRange
from qbinomial.models.laurent import LaurentPoly
from qbinomial.models.xseries import XSeries


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


class TermSchema(BaseModel):
    """
    Один член многочлена Лорана: coeff·q^exp.
    Коэффициент передаётся строкой, т.к. может не поместиться в число JSON.
    """
    exp: int = Field(..., description="Exponent of q")
    coeff: str = Field(..., pattern=r"^-?[0-9]+$", description="Nonzero coefficient as a decimal string")

    model_config = ConfigDict(frozen=True)


class LaurentPolySchema(BaseModel):
    """
    Модель многочлена Лорана для JSON-вывода.
    Члены упорядочены по возрастанию показателя.
    """
    terms: list[TermSchema] = Field(default_factory=list, description="Nonzero terms, ascending by exp")

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "LaurentPolySchema":
        return cls(terms=[TermSchema(exp=exp, coeff=str(coeff)) for exp, coeff in poly.items()])

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.from_terms((term.exp, int(term.coeff)) for term in self.terms)


class RationalSchema(BaseModel):
    numerator: str = Field(..., description="Numerator as a decimal string")
    denominator: str = Field(..., description="Positive denominator as a decimal string")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "RationalSchema":
        return cls(numerator=str(value.numerator), denominator=str(value.denominator))


class XSeriesSchema(BaseModel):
    order: int = Field(..., ge=0, description="Truncation order (inclusive)")
    coeffs: list[LaurentPolySchema] = Field(..., description="Coefficient of x^i at index i")

    @classmethod
    def from_series(cls, series: XSeries) -> "XSeriesSchema":
        return cls(order=series.order, coeffs=[LaurentPolySchema.from_poly(c) for c in series.coeffs])


class IntRange(BaseModel):
    """
    Замкнутый целочисленный отрезок lo..hi (обе границы включительно).
    """
    lo: int = Field(..., description="Lower bound (inclusive)")
    hi: int = Field(..., description="Upper bound (inclusive)")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_bounds(self) -> "IntRange":
        if self.lo > self.hi:
            raise ValueError(f"lower bound {self.lo} exceeds upper bound {self.hi}")
        return self

    @classmethod
    def parse(cls, text: str) -> "IntRange":
        lo, sep, hi = text.partition("..")
        if not sep:
            raise InvalidRange(f"Range {text!r} must look like lo..hi")
        try:
            return cls(lo=int(lo), hi=int(hi))
        except ValueError as exc:
            raise InvalidRange(f"Range {text!r} is malformed: {exc}") from exc

    def values(self) -> range:
        return range(self.lo, self.hi + 1)


class GridSpec(BaseModel):
    """
    Диапазоны именованных параметров. Точки сетки - декартово произведение в порядке объявления.
    """
    ranges: dict[str, IntRange] = Field(..., description="Range per parameter name")

    def points(self) -> Iterator[dict[str, int]]:
        names = list(self.ranges)
        for values in itertools.product(*(r.values() for r in self.ranges.values())):
            yield dict(zip(names, values))

    def override(self, ranges: dict[str, IntRange]) -> "GridSpec":
        unknown = set(ranges) - set(self.ranges)
        if unknown:
            raise InvalidRange(f"Unknown grid parameter(s): {', '.join(sorted(unknown))}")
        return GridSpec(ranges={name: ranges.get(name, r) for name, r in self.ranges.items()})


class FailureSchema(BaseModel):
    params: dict[str, int] = Field(..., description="Grid point at which the identity failed")
    lhs: str = Field(..., description="Left side, canonical text form")
    rhs: str = Field(..., description="Right side, canonical text form")


class IdentityReport(BaseModel):
    identity: str = Field(..., description="Identity name")
    grid: GridSpec = Field(..., description="Grid the identity was checked on")
    checked: int = Field(..., ge=0, description="Number of grid points evaluated")
    failures: list[FailureSchema] = Field(default_factory=list, description="Failing comparisons")
    informational: bool = Field(False, description="True if the result does not gate the exit code")

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        suffix = " (informational)" if self.informational else ""
        lines = [f"{self.identity}: checked {self.checked}, failures {len(self.failures)}{suffix}"]
        for failure in self.failures:
            params = ", ".join(f"{name}={value}" for name, value in failure.params.items())
            lines.append(f"  {params}: {failure.lhs} != {failure.rhs}")
        return "\n".join(lines)
