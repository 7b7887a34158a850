"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all irkit errors."""


class ParseError(ToolkitError):
    """Malformed input file (XML, qrels, run, lexicon).

    Carries location context where available: ``line`` is 1-based,
    ``offset`` is a byte offset into the raw input.
    """

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.offset = offset


class ValidationError(ToolkitError):
    """Input violates a structural invariant (duplicate ids, rank gaps, bad parameters)."""


class CoverageError(ValidationError):
    """A judgment file does not cover exactly the required key set."""


class EmptyQueryError(ToolkitError):
    """Query preprocessing produced no terms (e.g. the query is all stop-words)."""


class EvaluationError(ToolkitError):
    """Run/qrels mismatch discovered during evaluation."""


class UndefinedMetricError(ToolkitError):
    """Requested statistic has no defined value (zero relevant docs, degenerate agreement table)."""
