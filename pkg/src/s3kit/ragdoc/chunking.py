"""Overlapping text chunking for document indexing.

Windows are at most `max_chunk_chars` long and step by
(max - overlap); when a window would cut mid-text, the break point is
pulled back to the nearest paragraph or sentence boundary found in the
final 20% of the window.
"""

from __future__ import annotations

from dataclasses import dataclass


class EmptyDocument(Exception):
    pass


@dataclass(frozen=True)
class ChunkConfig:
    max_chunk_chars: int = 1000
    overlap_chars: int = 150

    def __post_init__(self):
        if self.overlap_chars >= self.max_chunk_chars:
            raise ValueError("overlap must be smaller than max chunk size")
        if self.max_chunk_chars <= 0 or self.overlap_chars < 0:
            raise ValueError("chunk sizes must be positive")


@dataclass(frozen=True)
class Chunk:
    doc_id: str
    seq: int
    text: str
    start: int
    end: int

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "seq": self.seq,
            "text": self.text,
            "start": self.start,
            "end": self.end,
        }

    @property
    def marker(self) -> str:
        return f"[{self.doc_id}#{self.seq}]"


def _pull_back(text: str, start: int, end: int, max_chars: int) -> int:
    """Move the window end to a paragraph/sentence boundary inside the
    final 20% of the window, if one exists."""
    floor = start + int(max_chars * 0.8)
    window = text[floor:end]
    for sep in ("\n\n", ". "):
        i = window.rfind(sep)
        if i >= 0:
            return floor + i + len(sep)
    return end


def chunk_document(doc_id: str, text: str, config: ChunkConfig = ChunkConfig()) -> list[Chunk]:
    if not text:
        raise EmptyDocument(f"document {doc_id!r} is empty")
    chunks: list[Chunk] = []
    pos = 0
    seq = 0
    n = len(text)
    while pos < n:
        end = min(pos + config.max_chunk_chars, n)
        if end < n:
            end = _pull_back(text, pos, end, config.max_chunk_chars)
        chunks.append(Chunk(doc_id, seq, text[pos:end], pos, end))
        if end >= n:
            break
        nxt = end - config.overlap_chars
        pos = nxt if nxt > pos else end  # always make progress
        seq += 1
    return chunks
