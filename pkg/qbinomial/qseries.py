"""
q-сдвинутые факториалы (a;q)_k и тождество обращения

    (a;q)_k = (-a)^k q^{k(k-1)/2} (q^{1-k}/a; q)_k

для одночленов a = ±q^e.
"""
from qbinomial.exceptions import NegativeLength, NonUnitCoefficient, ZeroArgument
from qbinomial.models.laurent import ONE, LaurentPoly, checked_exponent
from qbinomial.models.monomial import QMonomial


def tri(k: int) -> int:
    """k(k-1)/2 для любого целого k (произведение всегда чётное)."""
    return checked_exponent(k * (k - 1) // 2)


def pochhammer(a: QMonomial, k: int) -> LaurentPoly:
    if k < 0:
        raise NegativeLength(f"(a;q)_k needs k >= 0, got {k}")
    result = ONE
    for j in range(k):
        result = result * (ONE - a.times_qpow(j).to_poly())
    return result


def pochhammer_reversed(a: QMonomial, k: int) -> LaurentPoly:
    """
    Правая часть тождества обращения, вычисленная буквально: множитель (-a)^k q^{k(k-1)/2},
    умноженный на (q^{1-k}/a; q)_k. Только при коэффициенте ±1 q^{1-k}/a остаётся в кольце Лорана.
    """
    if abs(a.coeff) > 1:
        raise NonUnitCoefficient(f"q^(1-k)/a is not integral for a coefficient {a.coeff}")
    if k < 0:
        raise NegativeLength(f"(a;q)_k needs k >= 0, got {k}")
    if k == 0:
        return ONE
    if a.coeff == 0:
        raise ZeroArgument("a = 0 has no reciprocal")

    prefactor = LaurentPoly.monomial(checked_exponent(a.exp * k + tri(k)), (-a.coeff) ** k)
    return prefactor * pochhammer(a.reciprocal().times_qpow(1 - k), k)
