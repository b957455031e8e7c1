"""
q-биномиальные коэффициенты [n, k] для любой пары целых чисел.

Два независимых пути вычисления. qbinom_oracle точно делит формулу произведения (она верна для любого n
при k >= 0, случай k < 0 сводится симметрией). qbinom разбирает случаи отрицательного n и через два
преобразования знака и степени сводит их к оракулу с неотрицательным верхним аргументом.
"""
from functools import lru_cache
from typing import NamedTuple

from loguru import logger

from qbinomial.config import ORACLE_CACHE_SIZE
from qbinomial.exceptions import InexactDivision, NegativeLength, OracleInvariantError
from qbinomial.models.laurent import ONE, ZERO, LaurentPoly, checked_exponent
from qbinomial.qseries import tri


class QBinomArgs(NamedTuple):
    n: int
    k: int


class Transform(NamedTuple):
    """[n, k] = sign · q^exp · [args]."""
    sign: int
    exp: int
    args: QBinomArgs

    def apply(self, value: LaurentPoly) -> LaurentPoly:
        return LaurentPoly.monomial(self.exp, self.sign) * value


@lru_cache(maxsize=ORACLE_CACHE_SIZE)
def qbinom_oracle(n: int, k: int) -> LaurentPoly:
    if k < 0:
        if n - k >= 0:
            return qbinom_oracle(n, n - k)
        return ZERO
    if 0 <= n < k:
        # множитель j = k - n в числителе равен 1 - q^0 = 0
        return ZERO

    logger.debug(f"Product formula for [{n}, {k}]")
    numerator = ONE
    denominator = ONE
    for j in range(1, k + 1):
        numerator = numerator * (ONE - LaurentPoly.monomial(checked_exponent(n - k + j)))
        denominator = denominator * (ONE - LaurentPoly.monomial(j))
    try:
        return numerator.exact_div(denominator)
    except InexactDivision as exc:
        logger.critical(f"Product formula for [{n}, {k}] did not divide exactly: {exc.detail}")
        raise OracleInvariantError(f"[{n}, {k}]: {exc.detail}") from exc


def trans1(n: int, k: int) -> Transform:
    if k < 0:
        raise NegativeLength(f"trans1 needs k >= 0, got {k}")
    return Transform(
        sign=-1 if k % 2 else 1,
        exp=checked_exponent(n * k - tri(k)),
        args=QBinomArgs(-n + k - 1, k),
    )


def trans2(n: int, k: int) -> Transform:
    if k > n:
        raise NegativeLength(f"trans2 needs k <= n, got n={n}, k={k}")
    # (n-k) и (n+k+1) разной чётности - произведение чётное
    return Transform(
        sign=-1 if (n - k) % 2 else 1,
        exp=checked_exponent((n - k) * (n + k + 1) // 2),
        args=QBinomArgs(-k - 1, n - k),
    )


def qbinom(n: int, k: int) -> LaurentPoly:
    if is_zero_region(n, k):
        return ZERO
    if n >= 0:
        return qbinom_oracle(n, k)
    if k >= 0:
        transform = trans1(n, k)
    elif k <= n:
        transform = trans2(n, k)
    else:
        return ZERO
    return transform.apply(qbinom_oracle(*transform.args))


def reciprocal(n: int, k: int) -> LaurentPoly:
    """[n, k] с заменой q на 1/q."""
    return qbinom(n, k).substitute_qinv()


def is_zero_region(n: int, k: int) -> bool:
    return (n >= 0 and (k < 0 or k > n)) or (n < 0 and n < k < 0)


def symmetry_sides(n: int, k: int) -> tuple[LaurentPoly, LaurentPoly]:
    return qbinom(n, k), qbinom(n, n - k)


def check_symmetry(n: int, k: int) -> bool:
    lhs, rhs = symmetry_sides(n, k)
    return lhs == rhs


def absorption_sides(n: int, k: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(1 - q^k)[n, k] и (1 - q^n)[n-1, k-1]."""
    lhs = (ONE - LaurentPoly.monomial(k)) * qbinom(n, k)
    rhs = (ONE - LaurentPoly.monomial(n)) * qbinom(n - 1, k - 1)
    return lhs, rhs


def check_absorption(n: int, k: int) -> bool:
    lhs, rhs = absorption_sides(n, k)
    return lhs == rhs
