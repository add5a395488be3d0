"""
Records module for skein4

This module provides the structured result records printed by the CLI and
returned by the HTTP API.
"""

import json
from typing import List, Optional

from pydantic import BaseModel, Field


def _render(value) -> str:
    text = str(value)
    if text == "" or any(ch in text for ch in ";=\"\n") or text != text.strip():
        return json.dumps(text)
    return text


class LineRecord(BaseModel):
    """Base class for records with a single-line key/value rendering"""

    def to_line(self) -> str:
        """Render as ``key=value; key=value`` in field order, skipping unset fields."""
        parts = []
        for key, value in self.model_dump().items():
            if value is None:
                continue
            parts.append(f"{key}={_render(value)}")
        return "; ".join(parts)


class ResultRecord(LineRecord):
    """Evaluation result for one link expression"""

    input: str
    spec: str
    writhe: int
    framing: int
    components: int = Field(..., ge=0)
    value: str
    normalized_value: str
    timing_ms: Optional[float] = None


class CheckItem(BaseModel):
    """One named check of a suite"""

    name: str
    passed: bool
    detail: str = ""
    expected_failure: bool = False
    skipped: bool = False

    @property
    def ok(self) -> bool:
        return self.skipped or (self.passed != self.expected_failure)

    def to_line(self) -> str:
        if self.skipped:
            status = "SKIP"
        elif self.expected_failure:
            status = "FAIL(expected)" if not self.passed else "PASS(unexpected)"
        else:
            status = "PASS" if self.passed else "FAIL"
        return f"{self.name} {status}" + (f" {self.detail}" if self.detail else "")


class SuiteReport(BaseModel):
    """Result of a named check suite"""

    suite: str
    items: List[CheckItem] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.ok for item in self.items)

    def failures(self) -> List[CheckItem]:
        return [item for item in self.items if not item.ok]

    def add(self, name: str, passed: bool, detail: str = "", expected_failure: bool = False) -> CheckItem:
        item = CheckItem(name=name, passed=passed, detail=detail, expected_failure=expected_failure)
        self.items.append(item)
        return item

    def skip(self, name: str, detail: str = "") -> CheckItem:
        item = CheckItem(name=name, passed=False, detail=detail, skipped=True)
        self.items.append(item)
        return item

    def item(self, name: str) -> CheckItem:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)


class ColoringRecord(LineRecord):
    """Fox 3-coloring summary of a tangle or link"""

    input: str
    arcs: int
    rank: int
    boundary_basis: List[List[int]]


class MatrixRecord(BaseModel):
    """Burau matrix rendered in poly-ring text format"""

    braid: str
    ideal: Optional[str] = None
    rows: List[List[str]]

    def to_text(self) -> str:
        return "\n".join("[" + ", ".join(row) + "]" for row in self.rows)
