"""Exception hierarchy.

Domain errors derive from :class:`AlgebraError`; input errors (bad syntax,
malformed definition files) derive from :class:`InputError`. The CLI maps the
first family to exit code 1 and the second to exit code 2.
"""


class AlgebraError(Exception):
    """Base class for errors raised by algebraic operations."""


class InputError(ValueError):
    """Base class for errors caused by malformed textual input."""


class FieldMismatch(AlgebraError, TypeError):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class RingMismatch(AlgebraError, TypeError):
    pass


class AlgebraMismatch(AlgebraError, TypeError):
    pass


class ZeroInput(AlgebraError, ValueError):
    pass


class NotLocallyFinite(AlgebraError):
    pass


class NotInvertible(AlgebraError):
    pass


class NotGradedRestrictable(AlgebraError):
    pass


class NotAffineLinear(AlgebraError, ValueError):
    pass


class NotValidated(AlgebraError):
    pass


class NotGraded(NotValidated):
    pass


class NotConnected(AlgebraError):
    pass


class NuNotCompatible(AlgebraError):
    pass


class NakayamaInconsistent(AlgebraError):
    pass


class AutomorphismInvalid(AlgebraError):
    pass


class ValidationFailed(AlgebraError):
    """Raised when an algebra satisfies none of the supported classes.

    The full :class:`~skewpbw.pbw.ValidationReport` is kept on ``report``.
    """

    def __init__(self, report):
        self.report = report
        super().__init__("algebra failed validation:\n" + report.format())


class ExprSyntaxError(InputError):
    """Syntax error in an expression; ``pos`` is the 0-based offset."""

    def __init__(self, message, pos=None, src=None):
        self.pos = pos
        self.src = src
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class UnknownIdentifier(InputError):
    pass


class SchemaError(InputError):
    pass
