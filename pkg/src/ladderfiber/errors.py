"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class LadderError(Exception):
    """Base class for all errors raised by ladderfiber."""


class ShapeError(LadderError, ValueError):
    """A shape could not be parsed, validated or normalized."""


class CapExceeded(LadderError):
    """A size cap (lattice, chains, determinant order, rank budget) was hit."""

    def __init__(self, what: str, limit: int, needed: int | None = None):
        self.what = what
        self.limit = limit
        self.needed = needed
        msg = f"{what} exceeds cap {limit}"
        if needed is not None:
            msg += f" (needs {needed})"
        super().__init__(msg)


class OracleDisagreement(LadderError):
    """A closed-form criterion and an enabled oracle returned different answers."""

    def __init__(self, message: str, dump: dict | None = None):
        super().__init__(message)
        self.dump = dump or {}
