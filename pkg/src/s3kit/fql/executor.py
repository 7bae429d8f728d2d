"""Execute FQL queries against a scanned corpus snapshot.

Matching is plain substring per source line (case-insensitive unless
configured otherwise); no regex, no cross-line matching, and comment
lines are scanned like any other line.
"""

from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field

from ..corpus import CorpusSnapshot, SourceFile
from .ast import CheckQuery, FqlQuery, VersionTag, normalize_version, render_fql

MAX_EXCERPT_CHARS = 200


@dataclass(frozen=True)
class MatchOptions:
    case_sensitive: bool = False


@dataclass(frozen=True)
class Hit:
    file: str
    line: int  # 1-based
    term: str
    excerpt: str

    def to_dict(self) -> dict:
        return {"file": self.file, "line": self.line, "term": self.term, "excerpt": self.excerpt}


@dataclass(frozen=True)
class CheckReport:
    query: str
    matched: bool
    tag: str | None
    hits: tuple[Hit, ...]

    def to_dict(self) -> dict:
        return {
            "kind": "check",
            "query": self.query,
            "matched": self.matched,
            "tag": self.tag,
            "hits": [h.to_dict() for h in self.hits],
        }


@dataclass(frozen=True)
class MaxWinner:
    tag: VersionTag
    hits: tuple[Hit, ...]


@dataclass(frozen=True)
class MaxReport:
    query: str
    winner: MaxWinner | None
    checks: tuple[CheckReport, ...]

    def to_dict(self) -> dict:
        return {
            "kind": "max",
            "query": self.query,
            "winner": None
            if self.winner is None
            else {
                "tag": str(self.winner.tag),
                "raw_tag": self.winner.tag.raw,
                "hits": [h.to_dict() for h in self.winner.hits],
            },
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass(frozen=True)
class ListEntry:
    tag: str | None
    matched: bool
    hit_count: int


@dataclass(frozen=True)
class ListReport:
    query: str
    entries: tuple[ListEntry, ...]
    checks: tuple[CheckReport, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "kind": "list",
            "query": self.query,
            "entries": [
                {"tag": e.tag, "matched": e.matched, "hit_count": e.hit_count}
                for e in self.entries
            ],
            "checks": [c.to_dict() for c in self.checks],
        }


FeatureReport = CheckReport | MaxReport | ListReport


def _file_selected(f: SourceFile, check: CheckQuery) -> bool:
    if check.filter.is_wildcard:
        return True
    return any(fnmatch.fnmatch(f.path, g) for g in check.filter.globs)


def _scan_file(f: SourceFile, check: CheckQuery, options: MatchOptions) -> list[Hit]:
    terms = check.pattern.terms
    needles = terms if options.case_sensitive else tuple(t.lower() for t in terms)
    hits: list[Hit] = []
    for lineno, line in enumerate(f.lines, start=1):
        haystack = line if options.case_sensitive else line.lower()
        for term, needle in zip(terms, needles):
            if needle in haystack:
                hits.append(Hit(f.path, lineno, term, line.strip()[:MAX_EXCERPT_CHARS]))
    return hits


def _run_check(check: CheckQuery, corpus: CorpusSnapshot, options: MatchOptions) -> CheckReport:
    hits: list[Hit] = []
    # corpus files are already path-sorted; per-file scans emit line order,
    # so the merged list is deterministic without a final sort
    for f in corpus.files:
        if _file_selected(f, check):
            hits.extend(_scan_file(f, check, options))
    return CheckReport(
        query=render_fql(FqlQuery("check", (check,))),
        matched=bool(hits),
        tag=check.tag,
        hits=tuple(hits),
    )


def execute(
    query: FqlQuery, corpus: CorpusSnapshot, options: MatchOptions = MatchOptions()
) -> FeatureReport:
    """Run an FQL query over a corpus snapshot and build its report."""
    sub = tuple(_run_check(c, corpus, options) for c in query.checks)
    text = render_fql(query)
    if query.kind == "check":
        return CheckReport(text, sub[0].matched, sub[0].tag, sub[0].hits)
    if query.kind == "max":
        winner = None
        for report in sub:
            if report.matched:
                tag = normalize_version(report.tag)
                if winner is None or tag > winner.tag:
                    winner = MaxWinner(tag, report.hits)
        return MaxReport(text, winner, sub)
    entries = tuple(ListEntry(r.tag, r.matched, len(r.hits)) for r in sub)
    return ListReport(text, entries, sub)
