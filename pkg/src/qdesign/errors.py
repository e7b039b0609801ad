"""Exception types shared by the text formats and the evaluator."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed input text, with a 1-based line/column position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


class ValidationError(ValueError):
    """A diagram (or key) failed validation; ``issues`` holds the details."""

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues) or "invalid")


class EvaluationError(ValueError):
    pass


class DecodeError(ValueError):
    pass
