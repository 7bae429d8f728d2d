"""Append-only chunk index with exact cosine top-k retrieval and JSONL
persistence (one chunk + vector per line)."""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from pathlib import Path

from .chunking import Chunk
from .embedder import Embedding, cosine


class IndexError_(Exception):
    pass


class EmptyIndex(IndexError_):
    pass


class DimensionMismatch(IndexError_):
    pass


@dataclass(frozen=True)
class RetrievedContext:
    query: str
    items: tuple[tuple[Chunk, float], ...]  # (chunk, score), scores non-increasing

    def to_dict(self) -> dict:
        return {
            "query": self.query,
            "items": [{"chunk": c.to_dict(), "score": s} for c, s in self.items],
        }


class ChunkIndex:
    def __init__(self, embedder_id: str, dim: int):
        self.embedder_id = embedder_id
        self.dim = dim
        self._entries: list[tuple[Chunk, Embedding]] = []
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple[tuple[Chunk, Embedding], ...]:
        with self._lock:
            return tuple(self._entries)

    def append(self, chunk: Chunk, embedding: Embedding) -> None:
        if embedding.dim != self.dim:
            raise DimensionMismatch(f"expected dim {self.dim}, got {embedding.dim}")
        with self._lock:
            self._entries.append((chunk, embedding))

    def extend(self, pairs: list[tuple[Chunk, Embedding]]) -> None:
        for chunk, embedding in pairs:
            self.append(chunk, embedding)

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            with path.open("w", encoding="utf-8") as fh:
                header = {"embedder_id": self.embedder_id, "dim": self.dim}
                fh.write(json.dumps(header) + "\n")
                for chunk, emb in self._entries:
                    rec = {"chunk": chunk.to_dict(), "vector": list(emb.vector)}
                    fh.write(json.dumps(rec) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "ChunkIndex":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not lines:
            raise IndexError_(f"index file {path} is empty")
        header = json.loads(lines[0])
        index = cls(header["embedder_id"], header["dim"])
        for line in lines[1:]:
            rec = json.loads(line)
            c = rec["chunk"]
            chunk = Chunk(c["doc_id"], c["seq"], c["text"], c["start"], c["end"])
            index.append(chunk, Embedding(tuple(rec["vector"])))
        return index


def retrieve(index: ChunkIndex, query: str, embedder, k: int) -> RetrievedContext:
    """Score every entry by cosine against the query embedding and return
    the top-k, ties broken by (doc_id, seq)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    entries = index.entries
    if not entries:
        raise EmptyIndex("cannot retrieve from an empty index")
    qvec = embedder.embed(query)
    scored = [(chunk, cosine(qvec, emb)) for chunk, emb in entries]
    scored.sort(key=lambda cs: (-cs[1], cs[0].doc_id, cs[0].seq))
    return RetrievedContext(query=query, items=tuple(scored[:k]))
