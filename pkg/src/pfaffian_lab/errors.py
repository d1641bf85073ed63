"""Exception types raised across the package."""


class PfaffianLabError(Exception):
    """Base class for all package errors."""


class NotDivisible(PfaffianLabError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class NotAUnit(PfaffianLabError, ArithmeticError):
    """A power series with zero constant term cannot be inverted."""


class NonTerminating(PfaffianLabError, ValueError):
    """A truncation policy does not bound an infinite product or series."""


class OddSize(PfaffianLabError, ValueError):
    pass


class NotSquare(PfaffianLabError, ValueError):
    pass


class DimensionMismatch(PfaffianLabError, ValueError):
    pass


class IndexOutOfRange(PfaffianLabError, IndexError):
    pass


class NotSkewSymmetric(PfaffianLabError, ValueError):
    pass


class CellOutsidePartition(PfaffianLabError, ValueError):
    pass


class LengthExceedsN(PfaffianLabError, ValueError):
    pass


class LengthMismatch(PfaffianLabError, ValueError):
    pass


class NotAMatching(PfaffianLabError, ValueError):
    pass


class NotASubset(PfaffianLabError, ValueError):
    pass


class NotAcyclic(PfaffianLabError, ValueError):
    pass


class ExplosionGuard(PfaffianLabError, RuntimeError):
    """Brute-force enumeration would exceed the configured size cap."""


class UnknownIdentity(PfaffianLabError, KeyError):
    pass


class ParseError(PfaffianLabError, ValueError):
    pass
