"""Shared result types produced by the samplers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .geom_core import Circle

__all__ = ["SampleSet"]


@dataclass(frozen=True)
class SampleSet:
    """An ordered set of sample circles plus provenance.

    ``method`` names the producing pipeline ("mat", "sec" or "auto"),
    ``parameters`` records the knobs that shaped the result, and
    ``iterations`` the number of refinement iterations run (0 when not
    iterative).
    """

    balls: tuple[Circle, ...]
    method: str
    parameters: dict[str, Any] = field(default_factory=dict)
    iterations: int = 0

    def __len__(self) -> int:
        return len(self.balls)
