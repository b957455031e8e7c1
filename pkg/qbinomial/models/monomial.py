from dataclasses import dataclass

from qbinomial.exceptions import NonUnitCoefficient, ZeroArgument
from qbinomial.models.laurent import LaurentPoly, checked_exponent


@dataclass(frozen=True, slots=True)
class QMonomial:
    """c·q^e - аргумент a q-сдвинутого факториала (a;q)_k."""
    coeff: int
    exp: int

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.exp, self.coeff)

    def times_qpow(self, exp: int) -> "QMonomial":
        return QMonomial(self.coeff, checked_exponent(self.exp + exp))

    def reciprocal(self) -> "QMonomial":
        """1/a; остаётся целым одночленом только при коэффициенте ±1."""
        if self.coeff == 0:
            raise ZeroArgument("The zero monomial has no reciprocal")
        if abs(self.coeff) != 1:
            raise NonUnitCoefficient(f"Reciprocal of {self.coeff}*q^{self.exp} is not integral")
        return QMonomial(self.coeff, -self.exp)
