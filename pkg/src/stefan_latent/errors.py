"""Exception hierarchy shared by the package and mapped to CLI exit codes."""


class StefanError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ValidationError(StefanError, ValueError):
    """Problem data violates one or more invariants.

    ``problems`` lists every violated condition, not only the first one.
    """

    exit_code = 2

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class DomainError(StefanError, ValueError):
    exit_code = 2


class PreconditionError(StefanError, ValueError):
    exit_code = 2


class ConvergenceError(StefanError, RuntimeError):
    exit_code = 3


class BracketError(ConvergenceError):
    pass


class VerificationError(StefanError):
    exit_code = 4


class PrecisionError(StefanError, ArithmeticError):
    """Extended-precision evaluation cannot resolve the series cancellation."""

    exit_code = 4
