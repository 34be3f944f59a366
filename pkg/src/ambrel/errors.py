"""Exception types shared across the package.

Validation failures carry a machine-readable ``code`` (a short CamelCase
tag) and a ``witness`` built from plain labels, so reports can be emitted
as JSON without further translation.
"""

from __future__ import annotations


class ValidationError(ValueError):
    """A candidate object violates one of its defining axioms."""

    def __init__(self, code: str, message: str, witness=None):
        super().__init__(message)
        self.code = code
        self.witness = witness

    def report(self) -> dict:
        return {
            "verdict": "invalid",
            "error": self.code,
            "witness": self.witness,
            "detail": str(self),
        }


class SpaceMismatch(ValueError):
    """Two operands live over different spaces (or lattices) and cannot be combined."""


class SpaceTooLarge(ValueError):
    """Input exceeds the hard size gate of an exact enumeration path."""


class LatticeTooLarge(ValueError):
    """Lattice too large for a definitional (enumeration-based) check."""


class LatticeIsChain(ValueError):
    """The construction requires a pair of incomparable lattice elements."""


class MalformedInput(ValueError):
    """Unreadable or schema-violating external input."""
