"""Prompt assembly from repo-versioned templates.

Templates are JSON files under s3kit/data/templates with a `body` holding
`{query}` / `{context}` placeholders and a `no_context` clause used when
retrieval returned nothing."""

from __future__ import annotations

import json
from importlib import resources

from .index import RetrievedContext


class TemplateNotFound(Exception):
    pass


class BudgetTooSmall(Exception):
    pass


def load_template(template_id: str) -> dict:
    ref = resources.files("s3kit").joinpath(f"data/templates/{template_id}.json")
    try:
        return json.loads(ref.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise TemplateNotFound(f"no prompt template named {template_id!r}") from None


def format_context_block(context: RetrievedContext, limit: int | None = None) -> str:
    items = context.items if limit is None else context.items[:limit]
    return "\n\n".join(f"{chunk.marker}\n{chunk.text}" for chunk, _ in items)


def assemble_prompt(
    template_id: str,
    query: str,
    context: RetrievedContext,
    budget_chars: int,
    history: str = "",
) -> str:
    """Fill the template with the query and as many whole context chunks
    as fit the character budget, highest score first. Chunks are never
    truncated mid-text."""
    template = load_template(template_id)
    body: str = template["body"]

    def render(ctx_text: str) -> str:
        # plain replacement: chunk text may contain brace characters
        return (
            body.replace("{query}", query)
            .replace("{context}", ctx_text)
            .replace("{history}", history)
        )

    if not context.items:
        return render(template.get("no_context", "(no supporting context retrieved)"))

    included = 0
    prompt = render(template.get("no_context", ""))
    for n in range(1, len(context.items) + 1):
        candidate = render(format_context_block(context, n))
        if len(candidate) > budget_chars:
            break
        prompt = candidate
        included = n
    if included == 0:
        raise BudgetTooSmall(
            f"budget of {budget_chars} chars cannot fit the query and one chunk"
        )
    return prompt


def included_citations(prompt: str, context: RetrievedContext) -> list[tuple[str, int]]:
    """Chunk markers actually present in an assembled prompt."""
    return [
        (chunk.doc_id, chunk.seq) for chunk, _ in context.items if chunk.marker in prompt
    ]
