"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class RigidityError(Exception):
    """Base class for all errors raised by rigidlink."""


class InvalidArgumentError(RigidityError, ValueError):
    """An argument is malformed (bad vertex id, u == v, ...)."""


class PreconditionError(RigidityError, ValueError):
    """An input violates a documented precondition of an operation."""


class ParseError(RigidityError, ValueError):
    """A graph document could not be parsed."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column


class OracleDisagreement(RigidityError):
    """The combinatorial and numeric answers differ. Always a bug signal."""
