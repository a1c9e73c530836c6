"""Exception hierarchy shared by all modules."""


class EndoliftError(Exception):
    """Base class for every error raised by the package."""


class DomainError(EndoliftError, ValueError):
    """An argument lies outside the domain of a function."""


class PreconditionError(EndoliftError, ValueError):
    """Inputs are well formed but violate an operation's precondition."""


class InvariantViolation(EndoliftError, RuntimeError):
    """An internal consistency check failed at runtime."""


def check(condition: bool, message: str) -> None:
    """Raise InvariantViolation unless ``condition`` holds."""
    if not condition:
        raise InvariantViolation(message)
