"""Exception types shared across the package."""

from __future__ import annotations


class GroupAxiomError(ValueError):
    """A Cayley table fails one of the group axioms."""

    def __init__(self, axiom: str, detail: str):
        self.axiom = axiom
        super().__init__(f"{axiom}: {detail}")


class GroupMismatchError(ValueError):
    """Objects defined over different groups were combined."""


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, reason: str):
        self.text = text
        self.pos = pos
        self.reason = reason
        super().__init__(f"at position {pos}: {reason}")


class ResourceCapError(RuntimeError):
    """A configured enumeration or evaluation budget would be exceeded."""

    def __init__(self, cap: str, limit, requested):
        self.cap = cap
        self.limit = limit
        self.requested = requested
        super().__init__(f"{cap} exceeded: requested {requested}, limit {limit}")
