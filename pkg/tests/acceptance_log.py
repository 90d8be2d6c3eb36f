"""Verdict lines from the acceptance criteria, echoed in the pytest summary."""
from __future__ import annotations

LINES: list = []


def record(line: str) -> None:
    LINES.append(line)
