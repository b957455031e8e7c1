from collections.abc import Sequence
from dataclasses import dataclass

from qbinomial.exceptions import NegativeLength
from qbinomial.models.laurent import ZERO, LaurentPoly


@dataclass(frozen=True, slots=True)
class XSeries:
    """
    Степенной ряд по x, усечённый после x^order; коэффициенты - многочлены Лорана от q.
    coeffs[i] - коэффициент при x^i. Произведение усекается до меньшего порядка.
    """
    coeffs: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise NegativeLength("An XSeries needs at least the x^0 coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[LaurentPoly], order: int | None = None) -> "XSeries":
        """Дополняет нулями или усекает до нужного порядка."""
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise NegativeLength(f"Truncation order must be nonnegative, got {order}")
        padded = list(coeffs[:order + 1]) + [ZERO] * (order + 1 - len(coeffs))
        return cls(tuple(padded))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> LaurentPoly:
        return self.coeffs[index]

    def __mul__(self, other: "XSeries") -> "XSeries":
        order = min(self.order, other.order)
        product = []
        for m in range(order + 1):
            total = ZERO
            for j in range(m + 1):
                total = total + self.coeffs[j] * other.coeffs[m - j]
            product.append(total)
        return XSeries(tuple(product))

    def restrict(self, order: int) -> "XSeries":
        if order > self.order:
            raise NegativeLength(f"Cannot restrict an order-{self.order} series to order {order}")
        return XSeries.from_coeffs(self.coeffs, order)

    def negate_x(self) -> "XSeries":
        """x -> -x."""
        return XSeries(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def scale_x(self, exp: int) -> "XSeries":
        """x -> x·q^exp."""
        return XSeries(tuple(c.shift(exp * i) for i, c in enumerate(self.coeffs)))

    def to_text(self) -> str:
        return "[" + ", ".join(c.to_text() for c in self.coeffs) + "]"

    def __str__(self) -> str:
        return self.to_text()
