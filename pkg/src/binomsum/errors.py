"""Falsification signalling shared by all verification modules."""

from __future__ import annotations


class FalsificationError(Exception):
    """A verified claim failed; carries a machine-readable counterexample.

    Raised instead of returning a wrong value, so any counterexample aborts
    the batch loudly rather than being averaged away.
    """

    def __init__(self, operation: str, parameters: dict, detail: str):
        self.operation = operation
        self.parameters = parameters
        self.detail = detail
        super().__init__(f"{operation}{parameters}: {detail}")

    def record(self) -> dict:
        return {
            "operation": self.operation,
            "parameters": self.parameters,
            "detail": self.detail,
        }
