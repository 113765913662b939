"""Exception types raised across the library."""


class WittzetaError(Exception):
    """Base class for all library errors."""


class NonUnitConstantTerm(WittzetaError):
    """Series inversion requires an invertible constant term."""


class ZeroPolynomial(WittzetaError):
    """Resultants are undefined for the zero polynomial."""


class NotPrime(WittzetaError, ValueError):
    """Field characteristic must be prime."""


class DegreeZero(WittzetaError, ValueError):
    """Extension degree must be at least 1."""


class PrecisionMismatch(WittzetaError):
    """Operands carry different truncation precisions."""


class RingMismatch(WittzetaError):
    """Operands live over different coefficient rings."""


class TorsionUnsupported(WittzetaError):
    """Witt multiplication needs a torsion-free coefficient ring."""


class NonIntegral(WittzetaError):
    """A ghost vector has no preimage over the base ring."""


class PrecisionTooLow(WittzetaError):
    """Rational reconstruction needs 2*dmax < precision."""


class BudgetExceeded(WittzetaError):
    """Point enumeration would exceed the 10^7 tuple budget."""


class CensusInconsistent(WittzetaError):
    """Moebius inversion produced a negative or fractional closed-point count."""


class UnvaluedAtom(WittzetaError):
    """A measure was applied to an atom it has no value for."""


class UnsupportedClass(WittzetaError):
    """Census-backed zeta functions are only defined on single variety atoms."""


class NotRationalAtBound(WittzetaError):
    """No rational form with the requested degree bound was found."""


class ParseError(WittzetaError, ValueError):
    """Malformed polynomial text."""
