"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end:
2 parse/consistency, 3 precondition violation, 4 precision exhausted,
5 budget exceeded.
"""


class TorusDegenError(Exception):
    exit_code = 3


# input / consistency -------------------------------------------------------

class ParseError(TorusDegenError, ValueError):
    exit_code = 2

    def __init__(self, message, line=None):
        self.line = line
        self.message = message
        super().__init__(message if line is None else f"line {line}: {message}")


class ConsistencyError(TorusDegenError, ValueError):
    exit_code = 2


# arithmetic ------------------------------------------------------------------

class MismatchedField(TorusDegenError, ValueError):
    pass


class DivisionByZero(TorusDegenError, ZeroDivisionError):
    pass


# polyhedra -------------------------------------------------------------------

class RankTooLarge(TorusDegenError, ValueError):
    pass


class RankMismatch(TorusDegenError, ValueError):
    pass


class NotPointed(TorusDegenError, ValueError):
    pass


class NonpositiveSlope(TorusDegenError, ValueError):
    pass


class EmptyInput(TorusDegenError, ValueError):
    pass


class NonpositiveInput(TorusDegenError, ValueError):
    pass


# polynomials / families --------------------------------------------------------

class ShapeMismatch(TorusDegenError, ValueError):
    pass


class BudgetExceeded(TorusDegenError, RuntimeError):
    exit_code = 5


class ConeTooLarge(TorusDegenError, ValueError):
    pass


class NotInCone(TorusDegenError, ValueError):
    pass


# reduction -------------------------------------------------------------------

class PreconditionViolated(TorusDegenError, ValueError):
    pass


class NoDestabilizingDirection(PreconditionViolated):
    pass


class LimitDoesNotExist(TorusDegenError, ValueError):
    pass


class AmbientViolation(TorusDegenError, ValueError):
    pass


class NonincreasingLabels(TorusDegenError, ValueError):
    pass


class PrecisionExhausted(TorusDegenError, ArithmeticError):
    exit_code = 4
