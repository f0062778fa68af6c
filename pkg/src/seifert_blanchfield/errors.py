"""Exception hierarchy.

Validation errors describe malformed input (wrong shapes, mixed rings, bad
JSON).  Mathematical errors describe well-formed input on which an operation
is undefined (a singular form, a non-invertible matrix, ...).  The CLI maps
the first family to exit code 2 and the second to exit code 1.
"""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(AlgebraError, ValueError):
    pass


class MathematicalError(AlgebraError, ArithmeticError):
    pass


class ShapeMismatch(ValidationError):
    pass


class RingMismatch(ValidationError):
    pass


class NotSquare(ValidationError):
    pass


class SourceTargetMismatch(ValidationError):
    pass


class WrongEta(ValidationError):
    pass


class NotInvertible(MathematicalError):
    pass


class NotIdempotent(MathematicalError):
    pass


class NotIntertwining(MathematicalError):
    pass


class NotNearProjection(MathematicalError):
    pass


class InvalidPresentation(MathematicalError):
    pass


class SingularForm(MathematicalError):
    pass


class NotSymmetric(MathematicalError):
    pass


class NotNonsingularForm(MathematicalError):
    pass


class DegreeCapExceeded(MathematicalError):
    """A Laurent polynomial grew past the configured degree window."""


class InternalAssertion(AssertionError):
    """An identity that the construction guarantees has failed.

    Raised instead of a bare ``assert`` so the check survives ``python -O``.
    Seeing one of these means a bug, never bad input.
    """


def require(condition, message):
    if not condition:
        raise InternalAssertion(message)
