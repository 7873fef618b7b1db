"""Exception hierarchy shared by all engines."""

from __future__ import annotations


class ColoringError(Exception):
    """Base class for every error raised by this package."""


class InputError(ColoringError, ValueError):
    """The caller handed over something malformed or out of contract."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ListTooShort(InputError):
    """A list violates the size bound required by the engine."""

    def __init__(self, element, size: int, required: int) -> None:
        self.element = element
        self.size = size
        self.required = required
        super().__init__(f"list of {element} has size {size}, needs at least {required}")


class TooWide(ColoringError):
    """Tree-width of the input exceeds 3."""

    def __init__(self, message: str = "tree-width exceeds 3") -> None:
        super().__init__(message)


class NotApplicable(ColoringError):
    pass


class Stuck(ColoringError):
    """A greedy extension ran out of colors on ``element``."""

    def __init__(self, element) -> None:
        self.element = element
        super().__init__(f"no remaining color for {element}")


class ResourceExceeded(ColoringError):
    """Exact search hit its node budget before deciding."""


class IntegrityError(ColoringError):
    """An invariant guaranteed by the underlying theorem failed: a bug."""
