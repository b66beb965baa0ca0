"""Exception hierarchy.

Every error raised by the library derives from :class:`GruenwaldError`, which
is a :class:`ValueError`, so callers that only care about bad input can catch
``ValueError``.
"""


class GruenwaldError(ValueError):
    """Base class for all library errors."""


class InvalidArgumentError(GruenwaldError):
    pass


class OutOfRangeShiftError(GruenwaldError):
    """A global shift theta0 lies outside the open interval (-pi/2n, pi/2n)."""


class InvalidConstructionError(GruenwaldError):
    pass


class InvalidShiftsError(GruenwaldError):
    pass


class SingularEvaluationError(GruenwaldError):
    """Evaluation hit a pole that is not a removable singularity."""


class InvalidOperatorGridError(GruenwaldError):
    pass


class OutOfDomainError(GruenwaldError):
    pass


class InvalidFunctionError(GruenwaldError):
    pass


class InvalidKappaError(GruenwaldError):
    pass


class InsufficientSmoothnessError(GruenwaldError):
    pass


class NotFoundError(GruenwaldError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)
