"""Exception types raised across the package."""


class CodedShiftError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CodedShiftError, ValueError):
    """Malformed input text. ``line`` is 1-based, or None when unknown."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotACodeError(CodedShiftError, ValueError):
    """A set of words was required to be a code and is not."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EmptyShiftError(CodedShiftError, ValueError):
    """A construction produced the empty shift."""


class HypothesisError(CodedShiftError, ValueError):
    """A precondition on an input automaton does not hold."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSynchronizedError(CodedShiftError, ValueError):
    """No constant was found within the search bound."""


class BudgetExceeded(CodedShiftError, RuntimeError):
    """A cooperative step budget ran out."""


class InvariantError(CodedShiftError, AssertionError):
    """An internal invariant failed. Always a bug."""
