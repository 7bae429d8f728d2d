from .chunking import Chunk, ChunkConfig, EmptyDocument, chunk_document
from .embedder import (
    DEFAULT_DIM,
    Embedding,
    HashedBowEmbedder,
    HttpEmbedder,
    cosine,
    fnv1a_64,
)
from .index import ChunkIndex, DimensionMismatch, EmptyIndex, RetrievedContext, retrieve
from .prompts import (
    BudgetTooSmall,
    TemplateNotFound,
    assemble_prompt,
    included_citations,
    load_template,
)

__all__ = [
    "BudgetTooSmall",
    "Chunk",
    "ChunkConfig",
    "ChunkIndex",
    "DEFAULT_DIM",
    "DimensionMismatch",
    "Embedding",
    "EmptyDocument",
    "EmptyIndex",
    "HashedBowEmbedder",
    "HttpEmbedder",
    "RetrievedContext",
    "TemplateNotFound",
    "assemble_prompt",
    "chunk_document",
    "cosine",
    "fnv1a_64",
    "included_citations",
    "load_template",
    "retrieve",
]
