from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

__all__ = ["DetectionReport", "NOT_APPLICABLE", "EngineError"]

NOT_APPLICABLE = "not applicable"


class EngineError(RuntimeError):
    """A detector cannot handle the requested pattern or instance."""


@dataclass
class DetectionReport:
    """Outcome of one detection.

    ``witness`` is a strictly increasing tuple of graph positions when
    ``found`` is true, else ``None``.  ``detail`` names the member of a
    family or the sub-detector that fired.
    """

    found: bool
    witness: Optional[tuple] = None
    engine: str = ""
    detail: str = ""
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.witness is not None:
            self.witness = tuple(int(x) for x in self.witness)
        if self.found and self.witness is None:
            raise ValueError("a positive report needs a witness")

    def line(self) -> str:
        """The one-line CLI rendering."""
        if self.found:
            return "FOUND " + " ".join(map(str, self.witness))
        return "NOT-FOUND"

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "found": self.found,
            "witness": list(self.witness) if self.witness else None,
            "engine": self.engine,
            "detail": self.detail,
            "notes": list(self.notes),
        }
