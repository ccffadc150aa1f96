"""Exception types raised by the charsum library.

Every failure mode that callers are expected to handle has its own class,
so tests and the CLI can distinguish bad input from a falsified identity.
"""


class CharsumError(Exception):
    """Base class for all charsum errors."""


# --- construction / input errors -------------------------------------------

class NonPrimeP(CharsumError):
    """The characteristic p is not a prime number."""


class EvenCharacteristic(CharsumError):
    """p = 2 is not supported; the constructions need odd characteristic."""


class DegreeUnsupported(CharsumError):
    """Requested extension degree is not one of k, 2k, 4k."""


class DivisionByZero(CharsumError, ZeroDivisionError):
    """Multiplicative inverse of the zero element."""


class ZeroArgument(CharsumError):
    """An operation that needs a nonzero element received zero."""


class NotInSubfield(CharsumError):
    """Element does not belong to the named subfield."""


class NotRationalInteger(CharsumError):
    """A cyclotomic integer asserted to be rational has omega terms."""


class IndexOutOfRange(CharsumError):
    """Cyclotomic class index outside 0..p^k."""


class BothCoefficientsZero(CharsumError):
    """The coefficient pair (a, b) = (0, 0) is not admissible."""


class WrongCase(CharsumError):
    """Operation applied to a coefficient pair outside its case."""


class ZeroB(CharsumError):
    """Distribution sweep requires b != 0."""


class ZeroC(CharsumError):
    """Curve point count requires C != 0."""


class PeriodMismatch(CharsumError):
    """Cross-correlation of sequences with different periods."""


class GuardExceeded(CharsumError):
    """Requested field size exceeds the desk-scale guard."""


# --- identity violations (test-failure conditions) --------------------------

class NoSolution(CharsumError):
    """Internal: the g-equation had no solution although the case held."""


class BoundViolation(CharsumError):
    """A proven bound was violated by an exhaustive scan."""


class OracleMismatch(CharsumError):
    """Closed form and brute-force oracle disagree."""


class RootCountViolation(CharsumError):
    """The spectrum root polynomial did not have exactly one root."""
