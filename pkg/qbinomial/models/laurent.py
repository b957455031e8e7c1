from collections.abc import Iterable, Mapping
from fractions import Fraction
from types import MappingProxyType

from qbinomial.config import EXPONENT_LIMIT
from qbinomial.exceptions import (
    DivisionByZero,
    EvalAtZero,
    ExponentOverflow,
    InexactDivision,
    ZeroPolynomial,
)


Rational = Fraction


def checked_exponent(value: int) -> int:
    """
    Возвращает value без изменений, если он помещается в знаковый 64-битный диапазон, иначе ExponentOverflow.
    """
    if not -EXPONENT_LIMIT - 1 <= value <= EXPONENT_LIMIT:
        raise ExponentOverflow(f"Exponent {value} is outside the signed 64-bit range")
    return value


class LaurentPoly:
    """
    Многочлен Лорана от q с целыми коэффициентами, хранится разреженно как {показатель: коэффициент}.
    Нулевые коэффициенты не хранятся, поэтому ноль - пустой словарь, а равенство - равенство словарей.
    Экземпляры неизменяемы.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        canonical: dict[int, int] = {}
        for exp, coeff in (terms or {}).items():
            if coeff:
                canonical[checked_exponent(exp)] = coeff
        self._terms = canonical

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[int, int]]) -> "LaurentPoly":
        summed: dict[int, int] = {}
        for exp, coeff in pairs:
            summed[exp] = summed.get(exp, 0) + coeff
        return cls(summed)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> list[tuple[int, int]]:
        """Члены по возрастанию показателя."""
        return sorted(self._terms.items())

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        other_poly = _coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        return self._terms == other_poly._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other_poly = _coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        summed = dict(self._terms)
        for exp, coeff in other_poly._terms.items():
            summed[exp] = summed.get(exp, 0) + coeff
        return LaurentPoly(summed)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other_poly = _coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other_poly = _coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        product: dict[int, int] = {}
        for exp_a, coeff_a in self._terms.items():
            for exp_b, coeff_b in other_poly._terms.items():
                exp = exp_a + exp_b
                product[exp] = product.get(exp, 0) + coeff_a * coeff_b
        return LaurentPoly(product)

    __rmul__ = __mul__

    def shift(self, exp: int) -> "LaurentPoly":
        """Умножение на q^exp."""
        return LaurentPoly({checked_exponent(e + exp): c for e, c in self._terms.items()})

    def valuation_degree(self) -> tuple[int, int]:
        if not self._terms:
            raise ZeroPolynomial("The zero polynomial has no valuation or degree")
        return min(self._terms), max(self._terms)

    def substitute_qinv(self) -> "LaurentPoly":
        return LaurentPoly({-exp: coeff for exp, coeff in self._terms.items()})

    def evaluate(self, q0: Rational | int) -> Rational:
        point = Fraction(q0)
        if point == 0 and any(exp < 0 for exp in self._terms):
            raise EvalAtZero("Cannot evaluate a polynomial with negative exponents at q = 0")
        return sum((coeff * point**exp for exp, coeff in self._terms.items()), Fraction(0))

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """
        Точное частное self / divisor.

        Оба операнда сдвигаются к обычным многочленам с ненулевым свободным членом и делятся
        с младших степеней; показатель частного - разность младших показателей.
        """
        if divisor.is_zero:
            raise DivisionByZero("Division by the zero polynomial")
        if self.is_zero:
            return ZERO

        num_val, num_deg = self.valuation_degree()
        den_val, den_deg = divisor.valuation_degree()
        remainder = [self._terms.get(num_val + i, 0) for i in range(num_deg - num_val + 1)]
        den = [divisor._terms.get(den_val + i, 0) for i in range(den_deg - den_val + 1)]

        quotient_len = len(remainder) - len(den) + 1
        if quotient_len <= 0:
            raise InexactDivision(f"{self} is not divisible by {divisor}")

        lead = den[0]
        quotient: list[int] = []
        for i in range(quotient_len):
            coeff, rest = divmod(remainder[i], lead)
            if rest:
                raise InexactDivision(f"{self} is not divisible by {divisor}")
            quotient.append(coeff)
            if coeff:
                for j, den_coeff in enumerate(den):
                    remainder[i + j] -= coeff * den_coeff
        if any(remainder):
            raise InexactDivision(f"{self} is not divisible by {divisor}")

        return LaurentPoly({num_val - den_val + i: c for i, c in enumerate(quotient)})

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, coeff in self.items():
            if parts:
                sign = " - " if coeff < 0 else " + "
            else:
                sign = "-" if coeff < 0 else ""
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            parts.append(sign + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.to_text()}')"


def _coerce(value: object) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return LaurentPoly({0: value})
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})


def lp_from_terms(pairs: Iterable[tuple[int, int]]) -> LaurentPoly:
    return LaurentPoly.from_terms(pairs)


def lp_add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def lp_mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def lp_exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    return p.exact_div(d)


def lp_qpow(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


def lp_substitute_qinv(p: LaurentPoly) -> LaurentPoly:
    return p.substitute_qinv()


def lp_eval(p: LaurentPoly, q0: Rational | int) -> Rational:
    return p.evaluate(q0)


def lp_valuation_degree(p: LaurentPoly) -> tuple[int, int]:
    return p.valuation_degree()
