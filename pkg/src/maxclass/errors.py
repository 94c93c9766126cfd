"""Exception types and the small truthy result object used by checkers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class MaxClassError(Exception):
    """Base class. ``code`` is the CLI exit status the error maps to."""

    code = 2

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class EmptyClassError(MaxClassError, ValueError):
    pass


class MembershipError(MaxClassError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return self.args[0] if self.args else ""


class StructureError(MaxClassError, ValueError):
    """A structural precondition (maximum class, complete sequence, total map) failed."""


class NoConsistentConceptError(MaxClassError, ValueError):
    pass


class SchemeError(MaxClassError, ValueError):
    """A representation map misbehaved during compression."""

    code = 1


class ArrangementError(MaxClassError, ValueError):
    pass


class GenericityError(ArrangementError):
    """No generic sweep direction was found within the retry budget."""


class EnumerationError(ArrangementError):
    """Cell enumeration produced the wrong number of cells."""

    code = 3


class InternalConsistencyError(MaxClassError, RuntimeError):
    code = 3


@dataclass(frozen=True)
class Check:
    """Outcome of a verification: truthy iff ``ok``.

    ``witness`` carries the offending object (a pair of concepts, a subset of
    planes, a step index...) and ``reason`` a short human-readable message.
    """

    ok: bool
    witness: Any = None
    reason: str = ""
    step: int | None = None
    residual: Any = None

    def __bool__(self) -> bool:
        return self.ok
