"""Exception types raised by graphkmeans."""


class GraphError(ValueError):
    """Invalid graph construction or query (bad endpoint, weight, node set)."""


class ParseError(ValueError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"line {lineno}: "
        elif where:
            where += " "
        super().__init__(where + message)


class ConvergenceError(RuntimeError):
    """An iterative method failed to converge."""
