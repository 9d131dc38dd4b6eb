"""Exception types shared across the package."""

from __future__ import annotations


class WvcError(Exception):
    """Base class for all package errors."""


class GraphBuildError(WvcError):
    """Rejected graph construction input (bad edge, bad weight)."""


class GraphFormatError(WvcError):
    """Malformed graph file; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(WvcError):
    """An engine was called outside its contract; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ClassMembershipError(WvcError):
    """Input graph is not in the class a pipeline requires."""

    def __init__(self, label: str, pattern: str, embedding: tuple[int, ...]):
        self.label = label
        self.pattern = pattern
        self.embedding = embedding
        super().__init__(
            f"graph is not {label}: contains induced {pattern} at {embedding}"
        )


class NoSupportedClassError(WvcError):
    """auto dispatch failed; carries one witness per rejected class."""

    def __init__(self, witnesses: dict[str, tuple[str, tuple[int, ...]]]):
        self.witnesses = witnesses
        detail = "; ".join(
            f"{label}: {pat} at {emb}" for label, (pat, emb) in sorted(witnesses.items())
        )
        super().__init__(f"graph belongs to none of the supported classes ({detail})")


class StructureViolation(WvcError):
    """A state the structure theorems rule out was reached.

    This is deliberately loud: for an in-class input it can only mean a
    falsified theorem or an implementation bug, and the payload is the
    counterexample to ship.
    """

    def __init__(self, rule: str, message: str, payload: dict | None = None):
        self.rule = rule
        self.payload = payload or {}
        super().__init__(f"[{rule}] {message}")


class OracleBudgetExceeded(WvcError):
    """Exact search ran out of its node budget; never a wrong answer."""

    def __init__(self, nodes: int, budget: int):
        self.nodes = nodes
        self.budget = budget
        super().__init__(f"oracle budget exceeded ({nodes} nodes > {budget})")


class GenerationExhausted(WvcError):
    """Rejection sampling used up max_attempts without an accept."""
