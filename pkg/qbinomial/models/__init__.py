from .laurent import ONE, ZERO, LaurentPoly, Rational
from .monomial import QMonomial
from .xseries import XSeries


__all__ = ["ONE", "ZERO", "LaurentPoly", "QMonomial", "Rational", "XSeries"]
