"""Text embedders: a deterministic hashed bag-of-words built-in (so the
whole retrieval chain is testable offline) and an HTTP adapter for an
external embedding service."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import requests

DEFAULT_DIM = 1024

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_TOKEN_RE = re.compile(r"[a-z0-9]+")


def fnv1a_64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


@dataclass(frozen=True)
class Embedding:
    vector: tuple[float, ...]

    @property
    def dim(self) -> int:
        return len(self.vector)


def cosine(a: Embedding, b: Embedding) -> float:
    dot = sum(x * y for x, y in zip(a.vector, b.vector))
    # stored vectors are unit-norm (or all-zero), so the dot product is
    # already the cosine; clamp for float noise
    return max(-1.0, min(1.0, dot))


class HashedBowEmbedder:
    """Lowercase, split on non-alphanumerics, FNV-1a hash each token into
    a bucket, weight by ln(1 + tf), then L2-normalize."""

    def __init__(self, dim: int = DEFAULT_DIM):
        self.dim = dim
        self.id = f"hashed-bow-{dim}"

    def embed(self, text: str) -> Embedding:
        counts: dict[int, int] = {}
        for token in _TOKEN_RE.findall(text.lower()):
            bucket = fnv1a_64(token.encode("utf-8")) % self.dim
            counts[bucket] = counts.get(bucket, 0) + 1
        vec = [0.0] * self.dim
        for bucket, tf in counts.items():
            vec[bucket] = math.log1p(tf)
        norm = math.sqrt(sum(x * x for x in vec))
        if norm > 0:
            vec = [x / norm for x in vec]
        return Embedding(tuple(vec))

    def embed_many(self, texts: list[str]) -> list[Embedding]:
        return [self.embed(t) for t in texts]


class HttpEmbedder:
    """Adapter for an external embedding endpoint:
    POST {"texts": [...]} -> {"vectors": [[...]], "dim": int, "model_id": str}.
    """

    def __init__(self, url: str, timeout: float = 30.0):
        self.url = url
        self.timeout = timeout
        self.id = f"http:{url}"
        self.dim: int | None = None

    def embed_many(self, texts: list[str]) -> list[Embedding]:
        resp = requests.post(self.url, json={"texts": texts}, timeout=self.timeout)
        resp.raise_for_status()
        data = resp.json()
        self.dim = data["dim"]
        self.id = f"http:{data.get('model_id', self.url)}"
        return [Embedding(tuple(v)) for v in data["vectors"]]

    def embed(self, text: str) -> Embedding:
        return self.embed_many([text])[0]
