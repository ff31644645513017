"""Exception types shared across the package."""


class DfaoError(Exception):
    """Base class for every error this package raises on purpose."""


class BadRadix(DfaoError):
    """The digit radix k must be an integer >= 2."""


class NoStates(DfaoError):
    """A machine needs at least one state."""


class UnknownState(DfaoError):
    """A state name or index was referenced but never declared."""


class DuplicateState(DfaoError):
    """The same state was declared twice."""


class MissingTransition(DfaoError):
    """The transition table must cover every (state, digit) pair."""


class DuplicateTransition(DfaoError):
    """The transition table defines some (state, digit) pair twice."""


class MissingOutput(DfaoError):
    """Outputs must cover every state or be omitted entirely."""


class DigitOutOfRange(DfaoError):
    """An input digit lies outside 0 .. k-1."""


class RadixMismatch(DfaoError):
    """The operation needs two machines over the same digit alphabet."""


class UnknownCorpusName(DfaoError):
    """No bundled machine has that name."""


class NoRecurrence(DfaoError):
    """No independent closed form is bundled for that sequence."""


class InstanceTooLarge(DfaoError):
    """Exhaustive enumeration would exceed the configured budget."""


class AutSyntaxError(DfaoError):
    """Malformed .aut text; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
