"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph data: bad edge list, malformed port structure, bad params."""


class ParseError(GraphError):
    """Malformed graph file; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ProtocolFault(RuntimeError):
    """The engine delivered a message the protocol forbids.

    Signals a broken engine (or corrupted transcript), never a property of a
    valid input graph.
    """


class AnalysisFault(RuntimeError):
    """A structural guarantee of the algorithm failed to hold.

    Raised by the analysis and double-cover checks; must never occur on a
    genuine run.
    """


class OracleRefusal(RuntimeError):
    """Exact solving declined: instance over the size cap or search budget."""
