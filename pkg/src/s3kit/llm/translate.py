"""Natural language -> FQL / table-query translation.

Both pipelines share the same shape: build a prompt, call the backend,
extract and validate a structured query from the free-form response,
retry once with the error appended, then (for FQL) fall back to a
deterministic lexicon-driven synthesis.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from ..fql.ast import CheckQuery, FileFilter, FqlError, FqlQuery, Pattern, render_fql
from ..fql.parser import parse_fql
from ..metadata.tables import (
    QueryPlan,
    Table,
    TableError,
    UnknownColumn,
    UnparseablePlan,
    parse_select,
    query_tables,
)
from ..ragdoc.chunking import ChunkConfig, chunk_document
from ..ragdoc.embedder import HashedBowEmbedder
from ..ragdoc.index import ChunkIndex, retrieve
from ..ragdoc.prompts import assemble_prompt, load_template
from .backends import CompletionParams
from .lexicon import Lexicon


class TranslationError(Exception):
    pass


class NoLexiconMatch(TranslationError):
    pass


class UnknownColumnInPlan(TranslationError):
    pass


@dataclass(frozen=True)
class TranslationResult:
    query: FqlQuery | QueryPlan
    raw_response: str
    source: str  # llm | fallback
    attempts: int


_FQL_START = re.compile(r"\b(CHECK|MAX|LIST)\b")


def extract_fql(response: str) -> str | None:
    """Pull the first CHECK/MAX/LIST expression out of free-form prose.
    The query runs to the first blank line (models wrap queries in
    explanation text)."""
    m = _FQL_START.search(response)
    if not m:
        return None
    rest = response[m.start() :]
    end = rest.find("\n\n")
    candidate = rest if end < 0 else rest[:end]
    return candidate.strip().strip("`").strip()


def build_fql_example_index(
    lexicon: Lexicon | None = None, embedder: HashedBowEmbedder | None = None
) -> ChunkIndex:
    """Index the bundled FQL handbook plus canonical renderings of every
    lexicon entry, for few-shot retrieval."""
    embedder = embedder or HashedBowEmbedder()
    lexicon = lexicon or Lexicon.bundled()
    index = ChunkIndex(embedder.id, embedder.dim)
    handbook = resources.files("s3kit").joinpath("data/fql_handbook.md").read_text(encoding="utf-8")
    cfg = ChunkConfig(max_chunk_chars=600, overlap_chars=60)
    for chunk in chunk_document("fql-handbook", handbook, cfg):
        index.append(chunk, embedder.embed(chunk.text))
    for i, entry in enumerate(lexicon.entries):
        try:
            text = f"Term: {entry.term}\nFQL: {render_fql(synthesize_from_entry(entry, lexicon))}"
        except FqlError:
            continue
        for chunk in chunk_document("lexicon", text, cfg):
            index.append(
                type(chunk)(chunk.doc_id, i, chunk.text, chunk.start, chunk.end),
                embedder.embed(chunk.text),
            )
    return index


def synthesize_from_entry(entry, lexicon: Lexicon) -> FqlQuery:
    """Deterministic query synthesis for one lexicon entry."""
    if entry.category == "library":
        check = CheckQuery(Pattern(entry.keywords), FileFilter.wildcard(), entry.term)
        return FqlQuery("check", (check,))
    if entry.category == "version":
        children = tuple(
            CheckQuery(Pattern(e.keywords), FileFilter.wildcard(), e.version_tag)
            for e in lexicon.version_family(entry)
        )
        return FqlQuery("max", children)
    children = tuple(
        CheckQuery(Pattern((kw,)), FileFilter.wildcard(), label or entry.term)
        for kw, label in zip(entry.keywords, entry.labels or (None,) * len(entry.keywords))
    )
    return FqlQuery("list", children)


def synthesize_fql(question: str, lexicon: Lexicon) -> FqlQuery:
    entry = lexicon.match(question)
    if entry is None:
        raise NoLexiconMatch(f"no lexicon entry matches question: {question!r}")
    return synthesize_from_entry(entry, lexicon)


def _validate_fql(response: str) -> FqlQuery:
    text = extract_fql(response)
    if text is None:
        raise FqlError("no CHECK/MAX/LIST expression found in response")
    query = parse_fql(text, mode="lenient")
    # strict re-validation of the canonical form
    return parse_fql(render_fql(query), mode="strict")


def translate_to_fql(
    question: str,
    lexicon: Lexicon,
    example_index: ChunkIndex,
    backend,
    k: int = 4,
) -> TranslationResult:
    """Few-shot translate a question to FQL, falling back to lexicon
    synthesis after two failed model attempts."""
    embedder = HashedBowEmbedder(example_index.dim)
    context = retrieve(example_index, question, embedder, k)
    budget = backend.capabilities.max_context_tokens * 4
    prompt = assemble_prompt("fql_translate", question, context, budget)

    attempts = 0
    last_error: Exception | None = None
    for attempt_prompt in (prompt, None):
        if attempt_prompt is None:
            attempt_prompt = prompt + f"\n\nYour previous answer failed to parse: {last_error}"
        attempts += 1
        response = backend.complete(attempt_prompt, CompletionParams())
        try:
            query = _validate_fql(response)
            return TranslationResult(query, response, "llm", attempts)
        except FqlError as exc:
            last_error = exc
    query = synthesize_fql(question, lexicon)
    return TranslationResult(query, "", "fallback", attempts)


def _schema_block(tables: dict[str, Table]) -> str:
    lines = []
    for t in tables.values():
        lines.append(f"Table {t.name} ({', '.join(t.columns)})")
    return "\n".join(lines)


def _validate_plan(plan: QueryPlan, tables: dict[str, Table]) -> QueryPlan:
    try:
        query_tables(plan, tables)
    except UnknownColumn as exc:
        raise UnknownColumnInPlan(str(exc)) from exc
    return plan


def _parse_table_response(response: str, tables: dict[str, Table]) -> QueryPlan:
    text = response.strip()
    # structured plans come back as JSON objects
    if text.startswith("{"):
        try:
            d = json.loads(text)
            return QueryPlan(
                select=tuple(d["select"]),
                frm=tuple(d["from"]),
                join_on=tuple(d["join_on"]) if d.get("join_on") else None,
                where=tuple((c, v) for c, v in d.get("where", [])),
                view_name=d.get("view_name"),
            )
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UnparseablePlan(f"bad JSON plan: {exc}") from exc
    m = re.search(r"(?:CREATE\s+VIEW|SELECT)\b", text, re.I)
    if not m:
        raise UnparseablePlan("response contains no SELECT statement")
    stmt = text[m.start() :]
    end = stmt.find(";")
    if end >= 0:
        stmt = stmt[: end + 1]
    return parse_select(stmt)


def translate_to_table_query(
    question: str,
    tables: dict[str, Table],
    backend,
    shots: str = "zero",
    examples: list[tuple[str, str]] | None = None,
) -> TranslationResult:
    """Translate a question over registered tables into an executable
    QueryPlan. Few-shot mode prepends user-provided (question, sql)
    examples; the prompts differ only by that block."""
    if shots not in ("zero", "few"):
        raise ValueError(f"unknown shots mode {shots!r}")
    template = load_template("table_query")
    examples_block = ""
    if shots == "few" and examples:
        examples_block = (
            "\n".join(f"Question: {q}\nSQL: {s}" for q, s in examples) + "\n\n"
        )
    prompt = (
        template["body"]
        .replace("{context}", _schema_block(tables))
        .replace("{history}", examples_block)
        .replace("{query}", question)
    )

    attempts = 0
    last_error: Exception | None = None
    attempt_prompt = prompt
    while attempts < 2:
        attempts += 1
        response = backend.complete(attempt_prompt, CompletionParams())
        try:
            plan = _parse_table_response(response, tables)
            return TranslationResult(_validate_plan(plan, tables), response, "llm", attempts)
        except (TableError, UnknownColumnInPlan) as exc:
            last_error = exc
            attempt_prompt = prompt + f"\n\nYour previous answer was invalid: {exc}"
    if isinstance(last_error, UnknownColumnInPlan):
        raise last_error
    raise UnparseablePlan(str(last_error))
