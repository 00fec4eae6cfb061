"""Structured outcome of a verification run."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

REPORT_SCHEMA = {
    "type": "object",
    "required": ["check", "algebra", "max_degree", "status", "bidegrees_checked",
                 "failures", "elapsed_ms"],
    "properties": {
        "check": {"type": "string"},
        "algebra": {"type": "string"},
        "max_degree": {"type": "integer"},
        "status": {"enum": ["pass", "fail"]},
        "bidegrees_checked": {"type": "integer", "minimum": 0},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["bidegree", "difference"],
                "additionalProperties": False,
                "properties": {
                    "bidegree": {"type": "array", "items": {"type": "integer"},
                                 "minItems": 2, "maxItems": 2},
                    "difference": {"type": "string"},
                },
            },
        },
        "elapsed_ms": {"type": "integer", "minimum": 0},
    },
}


@dataclass
class Failure:
    bidegree: tuple[int, int]
    difference: str


@dataclass
class VerificationReport:
    check: str
    algebra: str
    max_degree: int
    bidegrees_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0
    outcomes: list[tuple[tuple[int, int], bool]] = field(default_factory=list, repr=False)

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, bidegree, difference) -> None:
        """Count one comparison; ``difference`` is falsy when it vanished."""
        self.bidegrees_checked += 1
        self.outcomes.append(((int(bidegree[0]), int(bidegree[1])), not difference))
        if difference:
            self.failures.append(Failure((int(bidegree[0]), int(bidegree[1])), str(difference)))

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "algebra": self.algebra,
            "max_degree": self.max_degree,
            "status": self.status,
            "bidegrees_checked": self.bidegrees_checked,
            "failures": [{"bidegree": list(f.bidegree), "difference": f.difference}
                         for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_text(self) -> str:
        lines = [
            f"check      : {self.check}",
            f"algebra    : {self.algebra}",
            f"max degree : {self.max_degree}",
            f"checked    : {self.bidegrees_checked}",
            f"status     : {self.status.upper()}",
        ]
        lines.extend(self._grid())
        for f in self.failures:
            lines.append(f"  FAIL [{f.bidegree[0]},{f.bidegree[1]}]: {f.difference}")
        return "\n".join(lines)

    def _grid(self) -> list[str]:
        # Triangle of bidegrees: '.' all comparisons vanished, 'X' some failed.
        cells: dict[tuple[int, int], bool] = {}
        for b, ok in self.outcomes:
            cells[b] = cells.get(b, True) and ok
        if not cells or min(min(b) for b in cells) < 0 or max(max(b) for b in cells) > 24:
            return []
        top_i = max(b[0] for b in cells)
        top_j = max(b[1] for b in cells)
        rows = ["", "   j"]
        for j in range(top_j, -1, -1):
            marks = "".join(
                " " + (("." if cells[(i, j)] else "X") if (i, j) in cells else " ")
                for i in range(top_i + 1))
            rows.append(f"{j:4d}{marks}".rstrip())
        rows.append("    " + "".join(f"{i % 10:2d}" for i in range(top_i + 1)) + "  i")
        return rows


class Stopwatch:
    """Context manager that writes elapsed milliseconds into a report."""

    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self._start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = int(round((time.perf_counter() - self._start) * 1000))
        return False


def bidegree_grid(max_degree: int) -> list[tuple[int, int]]:
    """All (i, j) with i, j >= 0 and i + j <= max_degree, in degree order."""
    return [(i, d - i) for d in range(max_degree + 1) for i in range(d, -1, -1)]
