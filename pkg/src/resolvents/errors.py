"""Exception types shared across the package."""


class ResolventError(Exception):
    """Base class for every error raised by this package."""


# polynomial ring
class NotDivisible(ResolventError, ArithmeticError):
    pass


class MissingBinding(ResolventError, KeyError):
    pass


class NotSymmetric(ResolventError, ValueError):
    pass


class ZeroPolynomial(ResolventError, ValueError):
    pass


class InconsistentSystem(ResolventError, ValueError):
    pass


class PolySyntaxError(ResolventError, SyntaxError):
    """Malformed polynomial text; ``offset`` is the 0-based character position."""

    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.text = text
        self.offset = offset


# permutation groups
class CapExceeded(ResolventError, RuntimeError):
    pass


class NotASubgroup(ResolventError, ValueError):
    pass


class DegreeMismatch(ResolventError, ValueError):
    pass


class NotInvariant(ResolventError, ValueError):
    pass


class NotNormal(ResolventError, ValueError):
    pass


# resolvent engines
class NotInSpan(ResolventError, ValueError):
    pass


class NotInSquareSubring(ResolventError, ValueError):
    pass


class Underdetermined(ResolventError, ValueError):
    pass


class NonIntegralFit(ResolventError, ValueError):
    pass


# elliptic curves
class SingularCurve(ResolventError, ValueError):
    pass


class PointNotOnCurve(ResolventError, ValueError):
    pass


# numeric oracle
class NonConvergence(ResolventError, RuntimeError):
    pass


class NoPairing(ResolventError, ValueError):
    pass


class NoLabelingMatches(ResolventError, AssertionError):
    def __init__(self, message: str, max_deviation=None):
        super().__init__(message)
        self.max_deviation = max_deviation
