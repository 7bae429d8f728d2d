"""AST types for Feature Query Language (FQL) queries.

An FQL query is one of three shapes: a single CHECK, a MAX over tagged
CHECKs (highest matching version tag wins), or a LIST over CHECKs
(enumerate which tags are present).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field


class FqlError(Exception):
    """Base class for FQL parse/validation errors."""


class EmptyPattern(FqlError):
    pass


class BadVersionTag(FqlError):
    pass


@functools.total_ordering
@dataclass(frozen=True)
class VersionTag:
    major: int
    minor: int
    raw: str

    def __eq__(self, other):
        if not isinstance(other, VersionTag):
            return NotImplemented
        return (self.major, self.minor) == (other.major, other.minor)

    def __lt__(self, other):
        if not isinstance(other, VersionTag):
            return NotImplemented
        return (self.major, self.minor) < (other.major, other.minor)

    def __hash__(self):
        return hash((self.major, self.minor))

    def __str__(self):
        return f"{self.major}.{self.minor}"


def normalize_version(raw: str) -> VersionTag:
    """Normalize a version tag string to a (major, minor) pair.

    "3.1" and "31" both mean version 3.1; a bare digit means major-only.
    """
    s = raw.strip()
    if not s:
        raise BadVersionTag("empty version tag")
    if "." in s:
        parts = s.split(".")
        if len(parts) != 2 or not parts[0].isdigit() or not parts[1].isdigit():
            raise BadVersionTag(f"cannot normalize version tag {raw!r}")
        return VersionTag(int(parts[0]), int(parts[1]), raw)
    if s.isdigit():
        if len(s) == 1:
            return VersionTag(int(s), 0, raw)
        return VersionTag(int(s[0]), int(s[1:]), raw)
    raise BadVersionTag(f"cannot normalize version tag {raw!r}")


@dataclass(frozen=True)
class Pattern:
    """Ordered alternatives; a line matches if any term matches it."""

    terms: tuple[str, ...]

    def __post_init__(self):
        if not self.terms:
            raise EmptyPattern("pattern has no terms")
        for t in self.terms:
            if not t.strip():
                raise EmptyPattern("pattern term is empty")


WILDCARD = "*"


@dataclass(frozen=True)
class FileFilter:
    """Either the wildcard (all files) or a nonempty list of globs."""

    globs: tuple[str, ...] = ()  # empty tuple means wildcard

    @property
    def is_wildcard(self) -> bool:
        return not self.globs

    @classmethod
    def wildcard(cls) -> "FileFilter":
        return cls(())


@dataclass(frozen=True)
class CheckQuery:
    pattern: Pattern
    filter: FileFilter = field(default_factory=FileFilter.wildcard)
    tag: str | None = None

    def __post_init__(self):
        if self.tag is not None and not self.tag.strip():
            raise FqlError("tag must be nonempty when present")


@dataclass(frozen=True)
class FqlQuery:
    kind: str  # "check" | "max" | "list"
    checks: tuple[CheckQuery, ...]

    def __post_init__(self):
        if self.kind not in ("check", "max", "list"):
            raise FqlError(f"unknown query kind {self.kind!r}")
        if not self.checks:
            raise FqlError("query has no checks")
        if self.kind == "check" and len(self.checks) != 1:
            raise FqlError("CHECK query must have exactly one check")
        if self.kind == "max":
            for c in self.checks:
                if c.tag is None:
                    raise BadVersionTag("MAX child is missing a version tag")
                normalize_version(c.tag)  # raises BadVersionTag if unusable

    @property
    def check(self) -> CheckQuery:
        return self.checks[0]


def _render_check(c: CheckQuery) -> str:
    pat = " || ".join(c.pattern.terms)
    filespec = WILDCARD if c.filter.is_wildcard else ", ".join(c.filter.globs)
    out = f"CHECK ({pat}) WHERE ({filespec})"
    if c.tag is not None:
        out += f" AS ({c.tag})"
    return out


def render_fql(query: FqlQuery) -> str:
    """Emit the canonical text form; parsing it back yields an equal AST."""
    if query.kind == "check":
        return _render_check(query.check)
    kw = "MAX" if query.kind == "max" else "LIST"
    inner = ", ".join(_render_check(c) for c in query.checks)
    return f"{kw} ({inner})"
