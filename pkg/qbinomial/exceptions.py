class QBinomialError(Exception):
    """
    Базовый класс всех ошибок библиотеки.
    exit_code - код возврата командной строки, если ошибка дошла до неё.
    """
    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DivisionByZero(QBinomialError):
    pass


class InexactDivision(QBinomialError):
    pass


class ZeroPolynomial(QBinomialError):
    pass


class EvalAtZero(QBinomialError):
    exit_code = 4


class ExponentOverflow(QBinomialError):
    exit_code = 3


class NonUnitCoefficient(QBinomialError):
    pass


class ZeroArgument(QBinomialError):
    pass


class NonUnitConstantTerm(QBinomialError):
    pass


class NegativeLength(QBinomialError):
    pass


class UnknownIdentity(QBinomialError):
    exit_code = 2


class InvalidRange(QBinomialError):
    exit_code = 2


class OracleInvariantError(RuntimeError):
    """
    Оракул (формула произведения) поделил неточно - это ошибка арифметики, а не пользователя.
    """
