"""Error types raised by the library.

All of them are ``ValueError`` subclasses so callers that only care about
"bad input" can catch one thing.
"""

from typing import Any, Optional


class GaussLintError(ValueError):
    """Base class for invalid diagrams, words and arguments."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotDoubleOccurrence(GaussLintError):
    """A Gauss word with a symbol that does not occur exactly twice."""

    def __init__(self, symbol: Any, count: int, line: Optional[int] = None) -> None:
        self.symbol = symbol
        self.count = count
        super().__init__(f"symbol {symbol!r} occurs {count} times, expected 2", line)


class C1Violation(GaussLintError):
    """A chord whose endpoints are an even distance apart."""

    def __init__(self, detail: str, symbol: Any = None, line: Optional[int] = None) -> None:
        self.symbol = symbol
        super().__init__(f"C1 violation: {detail}", line)


class InvalidLintel(GaussLintError):
    """Chords that do not partition {0..2n-1} into pairs."""


class LintelParseError(GaussLintError):
    """Text that is not a lintel or a Gauss word."""

    def __init__(self, message: str, position: int = 0, line: Optional[int] = None) -> None:
        self.position = position
        super().__init__(f"{message} (at position {position})", line)


class SizeMismatch(GaussLintError):
    """Two operands of different sizes."""


class OutOfRange(GaussLintError):
    """A vertex index outside the graph."""


class SizeTooSmall(GaussLintError):
    """An operation that needs more vertices than the graph has."""


class SizeTooLarge(GaussLintError):
    """A size beyond the configured enumeration cap."""
