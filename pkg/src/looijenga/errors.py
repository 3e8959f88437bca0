"""Exception types shared across the package."""


class LooijengaError(Exception):
    pass


class PoleAtOne(LooijengaError, ArithmeticError):
    """A q-rational function has no finite value at q = 1."""


class NotSymmetric(LooijengaError, ValueError):
    """A Laurent polynomial is not invariant under s -> 1/s."""


class NotCyclotomic(LooijengaError, ArithmeticError):
    """A denominator does not factor into cyclotomic polynomials in q."""


class SizeMismatch(LooijengaError, ValueError):
    pass


class NotContained(LooijengaError, ValueError):
    pass


class BasisMismatch(LooijengaError, ValueError):
    pass


class UnknownGeometry(LooijengaError, KeyError):
    pass


class NoClosedForm(LooijengaError, ValueError):
    pass


class UnsupportedGeometry(LooijengaError, ValueError):
    pass


class CalibrationMissing(LooijengaError, ValueError):
    pass


class UnbalancedWeb(LooijengaError, ValueError):
    pass


class UndefinedSector(LooijengaError, ValueError):
    pass


class EngineUnavailable(LooijengaError, ValueError):
    pass


class MissingLowerClass(LooijengaError, KeyError):
    pass


class NoFormalBranch(LooijengaError, ValueError):
    pass


class MatchFailure(LooijengaError, AssertionError):
    def __init__(self, message, table=None):
        super().__init__(message)
        self.table = table or []
