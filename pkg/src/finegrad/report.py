"""Verification results shared by the checking modules and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class Report:
    ok: bool
    details: Dict[str, Any] = field(default_factory=dict)
    problems: List[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def fail(self, message: str) -> "Report":
        self.ok = False
        self.problems.append(message)
        return self
