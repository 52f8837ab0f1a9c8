"""Named verification results."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckReport"]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named numerical check.

    ``passed`` is true iff ``max_residual < tolerance``.
    """

    name: str
    max_residual: float
    tolerance: float
    details: str = ""
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed", bool(self.max_residual < self.tolerance))

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "details": self.details,
        }
