"""Exception types shared across the toolkit."""

from __future__ import annotations


class TurkazError(Exception):
    """Base class for all package errors."""


class MalformedData(TurkazError):
    """A registry data file violates the table invariants (corrupted or edited)."""

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        loc = ""
        if path is not None:
            loc = f" [{path}" + (f":{line}" if line is not None else "") + "]"
        super().__init__(message + loc)
        self.path = path
        self.line = line


class UnknownCharacter(TurkazError):
    """Input contains a character that cannot be transliterated (strict policy)."""

    def __init__(self, text: str, position: int, reason: str):
        super().__init__(f"untransliterable {text!r} at item {position} ({reason})")
        self.text = text
        self.position = position
        self.reason = reason


class EmptyInput(TurkazError):
    """No synthesizable text was provided."""


class BackendUnavailable(TurkazError):
    """The synthesis backend could not be reached (after one retry)."""


class BackendTimeout(TurkazError):
    """A synthesis request exceeded the per-request timeout."""


class BackendError(TurkazError):
    """The synthesis backend answered with an error status."""

    def __init__(self, status: int, message: str):
        super().__init__(f"backend error {status}: {message}")
        self.status = status
        self.message = message
