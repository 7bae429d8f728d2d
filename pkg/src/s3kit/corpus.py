"""Source-tree scanning: walk a directory into an immutable snapshot with
language identification and line statistics."""

from __future__ import annotations

import fnmatch
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

DEFAULT_MAX_FILE_BYTES = 4 * 1024 * 1024
LANGUAGES = ("Fortran", "C", "C++", "Python", "Shell", "Make", "CMake", "Other")

# well-known extensionless build files
_SPECIAL_NAMES = {
    "makefile": "Make",
    "gnumakefile": "Make",
    "cmakelists.txt": "CMake",
}


class CorpusError(Exception):
    pass


class RootNotFound(CorpusError):
    pass


def _load_extension_map() -> dict[str, str]:
    raw = json.loads(resources.files("s3kit").joinpath("data/languages.json").read_text())
    return {ext: lang for lang, exts in raw.items() for ext in exts}


_EXT_MAP = _load_extension_map()


def identify_language(path: str) -> str:
    name = Path(path).name.lower()
    if name in _SPECIAL_NAMES:
        return _SPECIAL_NAMES[name]
    ext = Path(path).suffix.lstrip(".").lower()
    return _EXT_MAP.get(ext, "Other")


@dataclass(frozen=True)
class ExclusionRules:
    globs: tuple[str, ...] = ()
    max_file_bytes: int = DEFAULT_MAX_FILE_BYTES


@dataclass(frozen=True)
class SourceFile:
    path: str  # corpus-relative, '/' separators
    language: str
    lines: tuple[str, ...]

    @property
    def line_count(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class LanguageStats:
    per_language: dict[str, tuple[int, int]]  # language -> (files, lines)
    total_files: int
    total_lines: int

    def to_dict(self) -> dict:
        return {
            "languages": {
                lang: {"files": f, "lines": n} for lang, (f, n) in sorted(self.per_language.items())
            },
            "total_files": self.total_files,
            "total_lines": self.total_lines,
        }


@dataclass(frozen=True)
class CorpusSnapshot:
    root: str
    files: tuple[SourceFile, ...]  # sorted by path
    excluded: tuple[tuple[str, str], ...] = field(default=())  # (path, reason)

    @property
    def stats(self) -> LanguageStats:
        return stats(self)


def stats(snapshot: CorpusSnapshot) -> LanguageStats:
    per: dict[str, tuple[int, int]] = {}
    for f in snapshot.files:
        files, lines = per.get(f.language, (0, 0))
        per[f.language] = (files + 1, lines + f.line_count)
    return LanguageStats(
        per_language=per,
        total_files=len(snapshot.files),
        total_lines=sum(f.line_count for f in snapshot.files),
    )


def empty_snapshot(root: str = "") -> CorpusSnapshot:
    return CorpusSnapshot(root=root, files=(), excluded=())


def _is_binary(sample: bytes) -> bool:
    return b"\x00" in sample


def _read_lines(p: Path) -> tuple[str, ...]:
    # legacy Fortran trees contain non-UTF-8 bytes; never abort on them
    text = p.read_text(encoding="utf-8", errors="replace")
    return tuple(text.splitlines())


def scan_tree(root: str | Path, rules: ExclusionRules = ExclusionRules()) -> CorpusSnapshot:
    """Walk a tree into a snapshot. Per-file problems become exclusions
    with reasons, never failures."""
    root_path = Path(root)
    if not root_path.is_dir():
        raise RootNotFound(f"corpus root not found: {root}")
    root_path = root_path.resolve()

    files: list[SourceFile] = []
    excluded: list[tuple[str, str]] = []

    def walk(d: Path):
        try:
            entries = sorted(d.iterdir(), key=lambda e: e.name)
        except PermissionError:
            excluded.append((_rel(d), "permission"))
            return
        for entry in entries:
            rel = _rel(entry)
            if entry.is_symlink():
                excluded.append((rel, "symlink"))
                continue
            if entry.is_dir():
                if entry.name.startswith("."):
                    excluded.append((rel, "hidden"))
                elif entry.name.startswith("build"):
                    excluded.append((rel, "build-dir"))
                else:
                    walk(entry)
                continue
            if not entry.is_file():
                excluded.append((rel, "special"))
                continue
            if entry.name.startswith("."):
                excluded.append((rel, "hidden"))
                continue
            if any(fnmatch.fnmatch(rel, g) for g in rules.globs):
                excluded.append((rel, "glob"))
                continue
            try:
                size = entry.stat().st_size
                if size > rules.max_file_bytes:
                    excluded.append((rel, "size"))
                    continue
                with entry.open("rb") as fh:
                    if _is_binary(fh.read(8192)):
                        excluded.append((rel, "binary"))
                        continue
                lines = _read_lines(entry)
            except PermissionError:
                excluded.append((rel, "permission"))
                continue
            except OSError:
                excluded.append((rel, "io-error"))
                continue
            files.append(SourceFile(rel, identify_language(rel), lines))

    def _rel(p: Path) -> str:
        return p.relative_to(root_path).as_posix()

    walk(root_path)
    files.sort(key=lambda f: f.path)
    excluded.sort(key=lambda e: e[0])
    return CorpusSnapshot(root=str(root_path), files=tuple(files), excluded=tuple(excluded))
