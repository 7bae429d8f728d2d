"""Document Q&A: retrieval, history-aware prompt assembly, generation."""

from __future__ import annotations

from dataclasses import dataclass

from ..ragdoc.embedder import HashedBowEmbedder
from ..ragdoc.index import ChunkIndex, retrieve
from ..ragdoc.prompts import BudgetTooSmall, assemble_prompt, included_citations
from .backends import CHARS_PER_TOKEN, CompletionParams
from .session import Session, SessionError


@dataclass(frozen=True)
class DocAnswer:
    answer: str
    citations: tuple[tuple[str, int], ...]  # (doc_id, seq)
    prompt: str

    def to_dict(self) -> dict:
        return {
            "answer": self.answer,
            "citations": [{"doc_id": d, "seq": s} for d, s in self.citations],
        }


def answer_with_context(
    session: Session,
    question: str,
    index: ChunkIndex,
    backend,
    embedder=None,
    k: int = 4,
    template_id: str = "rag_answer",
) -> DocAnswer:
    """Retrieve, assemble a history-prefixed prompt within the session's
    token budget (oldest turns dropped first), ask the backend, and
    record the new turn pair on the session."""
    if session.mode != "docs":
        raise SessionError(f"session {session.id!r} is not in docs mode")
    embedder = embedder or HashedBowEmbedder(index.dim)
    context = retrieve(index, question, embedder, k)

    budget_tokens = min(session.token_budget, backend.capabilities.max_context_tokens)
    budget_chars = budget_tokens * CHARS_PER_TOKEN

    prompt = None
    for skip in range(len(session.turns) + 1):
        history = session.history_text(skip_oldest=skip)
        try:
            candidate = assemble_prompt(
                template_id, question, context, budget_chars, history=history
            )
        except BudgetTooSmall:
            continue  # history still too long for even one chunk
        if len(candidate) <= budget_chars:
            prompt = candidate
            break
    if prompt is None:  # even with no history: keep the newest question
        prompt = assemble_prompt(template_id, question, context, budget_chars, history="")

    answer = backend.complete(prompt, CompletionParams())
    citations = tuple(included_citations(prompt, context))
    session.add_turn("user", question)
    session.add_turn("assistant", answer, artifacts={"citations": [list(c) for c in citations]})
    return DocAnswer(answer=answer, citations=citations, prompt=prompt)
