"""Exception hierarchy shared by every module of the package."""


class HyperjacError(Exception):
    """Base class for all package errors."""


# exactfield
class NotSquarefree(HyperjacError, ValueError):
    pass


class DegenerateRadicand(HyperjacError, ValueError):
    pass


# finfield / curve
class NotInert(HyperjacError, ValueError):
    pass


PrimeNotInert = NotInert


class Ramified(HyperjacError, ValueError):
    pass


class NotPrime(HyperjacError, ValueError):
    pass


# poly
class DivisionByZeroPoly(HyperjacError, ZeroDivisionError):
    pass


class DegreeOutOfRange(HyperjacError, ValueError):
    pass


class ScanBoundExceeded(HyperjacError, ValueError):
    pass


# curve
class SingularModel(HyperjacError, ValueError):
    pass


class WrongDegree(HyperjacError, ValueError):
    pass


class PointNotOnCurve(HyperjacError, ValueError):
    pass


# zeta
class BadReduction(HyperjacError, ValueError):
    pass


PrimeNotGood = BadReduction


class NonIntegralC2(HyperjacError, ArithmeticError):
    """Raised when point counts are inconsistent with a genus-2 zeta function."""


class EmptyWitnessList(HyperjacError, ValueError):
    pass


# jacobian
class NotOnJacobian(HyperjacError, ValueError):
    pass


class BadWeight(HyperjacError, ValueError):
    pass


class DegreeViolation(HyperjacError, ValueError):
    pass


class OrderExceedsBound(HyperjacError, ArithmeticError):
    pass


class ClosureExceedsBound(HyperjacError, ArithmeticError):
    pass


class NotClosed(HyperjacError, ValueError):
    pass


class DenominatorDivisibleByP(HyperjacError, ZeroDivisionError):
    pass


class FieldMismatch(HyperjacError, TypeError):
    pass


# pipeline
class RankNotAsserted(HyperjacError, RuntimeError):
    pass


class GroupSmallerThanBound(HyperjacError, RuntimeError):
    """The closure of the seeds is a proper subgroup of the torsion bound.

    Carries the partial closure so callers can report the gap.
    """

    def __init__(self, found: int, bound: int, elements=None):
        super().__init__(f"closure of seeds has {found} elements, torsion bound is {bound}")
        self.found = found
        self.bound = bound
        self.elements = elements or []
