"""Shared exception types."""

from __future__ import annotations


class DomainError(ValueError):
    """An operation's precondition is violated (disconnected graph, bad t, ...)."""


class InvalidColoringError(DomainError):
    """A well-formed coloring fails interval validation where a valid one is required."""


class ParseError(ValueError):
    """Malformed textual input.

    ``offset`` is a 0-based byte offset for single-line formats (graph6);
    ``line`` is a 1-based line number for multi-line formats (edge lists).
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        if offset is not None:
            message = f"byte {offset}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.offset = offset
        self.line = line


class InternalInvariantError(RuntimeError):
    """A construction-backed internal check failed.

    This signals a bug in the toolkit (or a misread construction), never bad
    user input; the CLI maps it to its own exit code so it is loud.
    """
