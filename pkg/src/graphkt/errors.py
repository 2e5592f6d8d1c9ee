"""Exception types shared across the package."""


class ParseError(ValueError):
    """Input text rejected; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class DomainError(Exception):
    """A hypothesis of the underlying theory is not met by the input."""


class ConditionLViolation(DomainError):
    """Some cycle has no exit; carries one such cycle as a vertex list."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(
            "condition (L) fails; witness cycle: " + " ".join(self.witness)
        )


class TailError(DomainError):
    """Tail construction rejected (base not singular, hidden edges, or a name clash)."""
