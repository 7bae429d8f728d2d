"""Parser for loop-variable access matrices: one row per variable, `|`
separated execution sections, one whitespace-separated cell per do-loop,
cell tokens ro / wo / rw / - (read-only, write-only, read-write, unused).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class SpelError(Exception):
    pass


class RaggedMatrix(SpelError):
    pass


class UnknownRole(SpelError):
    pass


class IndexOutOfRange(SpelError):
    pass


class AccessRole(enum.Enum):
    READ_ONLY = "ro"
    WRITE_ONLY = "wo"
    READ_WRITE = "rw"
    UNUSED = "-"

    @classmethod
    def from_token(cls, token: str) -> "AccessRole":
        try:
            return cls(token)
        except ValueError:
            raise UnknownRole(f"unknown access role token {token!r}") from None


@dataclass(frozen=True)
class Section:
    label: str
    loop_count: int


@dataclass(frozen=True)
class LoopMatrix:
    sections: tuple[Section, ...]
    variables: tuple[str, ...]
    cells: tuple[tuple[AccessRole, ...], ...]  # variables x total loops

    @property
    def total_loops(self) -> int:
        return sum(s.loop_count for s in self.sections)

    def section_offset(self, section_index: int) -> int:
        return sum(s.loop_count for s in self.sections[:section_index])

    def to_dict(self) -> dict:
        return {
            "sections": [{"label": s.label, "loops": s.loop_count} for s in self.sections],
            "variables": list(self.variables),
            "cells": [[c.value for c in row] for row in self.cells],
        }


def _segments(line: str) -> list[str]:
    parts = line.split("|")
    # a trailing '|' leaves an empty final segment; drop it
    if parts and not parts[-1].strip():
        parts = parts[:-1]
    return parts


def parse_loop_matrix(text: str) -> LoopMatrix:
    """Parse matrix text. Section widths come from the first data row,
    since the header's alignment is whitespace-based and unreliable."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise SpelError("matrix needs a header row and at least one data row")

    header = _segments(lines[0])
    labels = [seg.strip() for seg in header[1:]]  # first segment is the name column

    data_rows: list[tuple[str, list[list[str]]]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        segs = _segments(line)
        name = segs[0].strip()
        if not name:
            raise RaggedMatrix(f"line {lineno}: missing variable name")
        data_rows.append((name, [seg.split() for seg in segs[1:]]))

    first_name, first_segs = data_rows[0]
    if not first_segs:
        raise RaggedMatrix("first data row has no cell segments")
    widths = [len(seg) for seg in first_segs]
    sections = tuple(
        Section(labels[i].strip() if i < len(labels) and labels[i].strip() else f"section{i}", w)
        for i, w in enumerate(widths)
    )

    variables: list[str] = []
    rows: list[tuple[AccessRole, ...]] = []
    seen: set[str] = set()
    for name, segs in data_rows:
        if name in seen:
            raise SpelError(f"duplicate variable name {name!r}")
        seen.add(name)
        if len(segs) != len(widths) or any(len(s) != w for s, w in zip(segs, widths)):
            raise RaggedMatrix(f"row {name!r} does not match section widths {widths}")
        variables.append(name)
        rows.append(tuple(AccessRole.from_token(tok) for seg in segs for tok in seg))
    return LoopMatrix(sections=sections, variables=tuple(variables), cells=tuple(rows))


def loop_usage(
    matrix: LoopMatrix, section_index: int, loop_index: int
) -> list[tuple[str, AccessRole]]:
    """Variables used by one do-loop (cells other than '-'), with roles,
    in matrix row order."""
    if not 0 <= section_index < len(matrix.sections):
        raise IndexOutOfRange(f"section index {section_index} out of range")
    section = matrix.sections[section_index]
    if not 0 <= loop_index < section.loop_count:
        raise IndexOutOfRange(f"loop index {loop_index} out of range for section {section.label!r}")
    col = matrix.section_offset(section_index) + loop_index
    return [
        (var, row[col])
        for var, row in zip(matrix.variables, matrix.cells)
        if row[col] is not AccessRole.UNUSED
    ]
