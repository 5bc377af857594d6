"""Exception types shared across the package."""


class InternalInconsistency(AssertionError):
    """A mathematically excluded state was reached.

    Raised where the mathematics guarantees an outcome, for instance that a
    support graph is acyclic. Seeing one means an arithmetic bug, not bad
    input.
    """


class GenericityError(ValueError):
    """Input points violate a genericity precondition."""


class ConfigSyntaxError(ValueError):
    """Malformed configuration or graph text, with a 1-based location."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
