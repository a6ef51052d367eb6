"""Exception hierarchy shared by every layer of the package."""


class FibrometerError(Exception):
    """Base class for all errors raised by fibrometer."""


class InputError(FibrometerError):
    """Malformed or inconsistent user input (CLI exit code 2)."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class NonCocycleError(InputError):
    """The integer class does not vanish on some relator."""

    def __init__(self, relator_index, value):
        self.relator_index = relator_index
        self.value = value
        super().__init__(
            f"phi does not vanish on relator {relator_index}: phi(relator) = {value} != 0"
        )


class NotAKnotError(InputError):
    """Braid closure has more than one component."""


class NotTransitiveError(FibrometerError):
    """A requested coset action is not transitive."""


class LimitError(FibrometerError):
    """A hard size/degree cap was exceeded (CLI exit code 3)."""


class BudgetExhausted(LimitError):
    """Search ran out of nodes; ``partial`` holds everything found so far."""

    def __init__(self, message, partial=(), nodes=0):
        super().__init__(message)
        self.partial = list(partial)
        self.nodes = nodes


class CompositionNonzero(FibrometerError):
    """d2 followed by d1 is not the zero map (invalid chain complex)."""


class RelatorViolation(FibrometerError):
    """A representation or homomorphism fails to kill a relator."""


class PreconditionError(FibrometerError):
    pass
