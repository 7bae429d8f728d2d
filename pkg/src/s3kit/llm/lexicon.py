"""Curated terminology lexicon: natural-language HPC terms mapped to the
code keywords that reveal their use. Replaces an online terminology
translator with a reviewable data file."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..fql.ast import VersionTag, normalize_version

CATEGORIES = ("library", "version", "enumeration")


class LexiconError(Exception):
    pass


class DuplicateTerm(LexiconError):
    pass


@dataclass(frozen=True)
class LexiconEntry:
    term: str
    category: str  # library | version | enumeration
    keywords: tuple[str, ...]
    labels: tuple[str | None, ...] = ()  # parallel to keywords (enumeration display names)
    aliases: tuple[str, ...] = ()
    version_tag: str | None = None

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise LexiconError(f"entry {self.term!r}: unknown category {self.category!r}")
        if not self.keywords:
            raise LexiconError(f"entry {self.term!r}: keywords must be nonempty")
        if self.version_tag is not None:
            normalize_version(self.version_tag)  # raises BadVersionTag

    @property
    def version(self) -> VersionTag | None:
        return None if self.version_tag is None else normalize_version(self.version_tag)


def _parse_block(block: list[str], lineno: int) -> LexiconEntry:
    fields: dict[str, str] = {}
    keywords: list[str] = []
    labels: list[str | None] = []
    for line in block:
        if ":" not in line:
            raise LexiconError(f"line {lineno}: expected 'key: value', got {line!r}")
        key, _, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if key == "keyword":
            if " = " in value:
                kw, _, label = value.partition(" = ")
                keywords.append(kw.strip())
                labels.append(label.strip())
            else:
                keywords.append(value)
                labels.append(None)
        else:
            fields[key] = value
    if "term" not in fields:
        raise LexiconError(f"block ending at line {lineno}: missing 'term'")
    aliases = tuple(
        a.strip().lower() for a in fields.get("aliases", "").split(",") if a.strip()
    )
    return LexiconEntry(
        term=fields["term"],
        category=fields.get("category", "library"),
        keywords=tuple(keywords),
        labels=tuple(labels),
        aliases=aliases,
        version_tag=fields.get("version"),
    )


def parse_lexicon(text: str) -> list[LexiconEntry]:
    entries: list[LexiconEntry] = []
    block: list[str] = []
    seen: set[str] = set()

    def flush(lineno: int):
        if not block:
            return
        entry = _parse_block(block, lineno)
        if entry.term in seen:
            raise DuplicateTerm(f"duplicate lexicon term {entry.term!r}")
        seen.add(entry.term)
        entries.append(entry)
        block.clear()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush(lineno)
        else:
            block.append(line)
    flush(len(text.splitlines()) + 1)
    return entries


def load_lexicon(path: str | Path | None = None) -> list[LexiconEntry]:
    """Load a lexicon file; with no path, the bundled file ships the
    standard OpenMP/MPI mappings."""
    if path is None:
        text = resources.files("s3kit").joinpath("data/lexicon.txt").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_lexicon(text)


@dataclass
class Lexicon:
    entries: list[LexiconEntry] = field(default_factory=list)

    @classmethod
    def bundled(cls) -> "Lexicon":
        return cls(load_lexicon())

    def match(self, question: str) -> LexiconEntry | None:
        """Longest alias (or term) found as a substring of the question."""
        q = question.lower()
        best: tuple[int, LexiconEntry] | None = None
        for entry in self.entries:
            for alias in entry.aliases + (entry.term.lower(),):
                if alias and alias in q and (best is None or len(alias) > best[0]):
                    best = (len(alias), entry)
        return best[1] if best else None

    def version_family(self, entry: LexiconEntry) -> list[LexiconEntry]:
        """All version-category entries sharing an alias with `entry`,
        highest version first."""
        aliases = set(entry.aliases)
        family = [
            e
            for e in self.entries
            if e.category == "version" and (e is entry or aliases & set(e.aliases))
        ]
        return sorted(family, key=lambda e: e.version, reverse=True)
