"""Shared exception types."""


class VaslangError(Exception):
    pass


class StructureError(VaslangError):
    """An object references undeclared places, transitions, states or letters."""


class ParseError(VaslangError):
    """A text-format input is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceededError(VaslangError):
    """A bounded search ran out of budget before reaching a verdict.

    Raised instead of returning a possibly-wrong answer; carries a short
    description of the exhausted budget.
    """

    def __init__(self, what: str, **context):
        self.what = what
        self.context = context
        extra = ", ".join(f"{k}={v}" for k, v in context.items())
        super().__init__(f"budget exceeded: {what}" + (f" ({extra})" if extra else ""))
