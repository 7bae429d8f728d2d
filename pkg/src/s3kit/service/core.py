"""Shared engine behind the CLI and the HTTP API. Both surfaces build
their structured artifacts through this module so they stay identical.
"""

from __future__ import annotations

import threading
from pathlib import Path

from ..corpus import CorpusSnapshot, ExclusionRules, empty_snapshot, scan_tree
from ..fql.ast import render_fql
from ..fql.executor import FeatureReport, MatchOptions, MaxReport, execute
from ..fql.parser import parse_fql
from ..llm.backends import GenericHttpBackend, MockBackend
from ..llm.docs import answer_with_context
from ..llm.lexicon import Lexicon
from ..llm.translate import (
    build_fql_example_index,
    translate_to_fql,
    translate_to_table_query,
)
from ..metadata.tables import Table, load_csv, query_tables, render_sql
from ..ragdoc.chunking import chunk_document
from ..ragdoc.embedder import HashedBowEmbedder
from ..ragdoc.index import ChunkIndex
from .config import Config
from .store import SessionStore


def make_backend(config: Config):
    if config.backend.kind == "http":
        return GenericHttpBackend(
            url=config.backend.url,
            model=config.backend.model,
            api_key_env=config.backend.api_key_env,
            max_context_tokens=config.backend.max_context_tokens,
        )
    return MockBackend(max_context_tokens=config.backend.max_context_tokens)


class Engine:
    def __init__(self, config: Config, backend=None):
        self.config = config
        self.backend = backend if backend is not None else make_backend(config)
        self.embedder = HashedBowEmbedder()
        self.lexicon = Lexicon.bundled()
        self.example_index = build_fql_example_index(self.lexicon, self.embedder)
        self.store = SessionStore(config.sessions_dir)
        self.tables: dict[str, Table] = {}
        self._snapshot: CorpusSnapshot | None = None
        self._doc_indexes: dict[str, ChunkIndex] = {}
        self._swap = threading.Lock()

    # -- corpus ---------------------------------------------------------

    @property
    def snapshot(self) -> CorpusSnapshot:
        with self._swap:
            if self._snapshot is None:
                root = Path(self.config.corpus_root)
                rules = ExclusionRules(self.config.exclude_globs, self.config.max_file_bytes)
                self._snapshot = scan_tree(root, rules) if root.is_dir() else empty_snapshot()
            return self._snapshot

    def rescan(self) -> CorpusSnapshot:
        rules = ExclusionRules(self.config.exclude_globs, self.config.max_file_bytes)
        fresh = scan_tree(self.config.corpus_root, rules)
        with self._swap:
            self._snapshot = fresh
        return fresh

    def stats_artifact(self, snapshot: CorpusSnapshot | None = None) -> dict:
        snap = snapshot if snapshot is not None else self.snapshot
        return {"type": "language_stats", **snap.stats.to_dict()}

    # -- fql ------------------------------------------------------------

    def match_options(self) -> MatchOptions:
        return MatchOptions(case_sensitive=self.config.case_sensitive)

    def run_fql(self, query_text: str, snapshot: CorpusSnapshot | None = None) -> dict:
        query = parse_fql(query_text, mode="lenient")
        snap = snapshot if snapshot is not None else self.snapshot
        report = execute(query, snap, self.match_options())
        return self.report_artifact(report)

    @staticmethod
    def report_artifact(report: FeatureReport) -> dict:
        return {"type": "feature_report", **report.to_dict()}

    # -- docs -----------------------------------------------------------

    def doc_index_path(self, corpus: str = "docs") -> Path:
        return Path(self.config.index_dir) / f"{corpus}.jsonl"

    def doc_index(self, corpus: str = "docs") -> ChunkIndex:
        with self._swap:
            if corpus not in self._doc_indexes:
                path = self.doc_index_path(corpus)
                if path.is_file():
                    self._doc_indexes[corpus] = ChunkIndex.load(path)
                else:
                    self._doc_indexes[corpus] = ChunkIndex(self.embedder.id, self.embedder.dim)
            return self._doc_indexes[corpus]

    def ingest(self, files: list[str | Path], corpus: str = "docs") -> dict:
        index = self.doc_index(corpus)
        added = 0
        for f in files:
            p = Path(f)
            text = p.read_text(encoding="utf-8", errors="replace")
            for chunk in chunk_document(p.stem, text, self.config.chunking):
                index.append(chunk, self.embedder.embed(chunk.text))
                added += 1
        index.save(self.doc_index_path(corpus))
        return {
            "type": "ingest_result",
            "corpus": corpus,
            "chunks_added": added,
            "index_size": len(index),
        }

    # -- tables ---------------------------------------------------------

    def register_csv(self, name: str, path: str | Path, primary_key: str | None = None) -> Table:
        table = load_csv(name, Path(path).read_text(encoding="utf-8"), primary_key)
        self.tables[name] = table
        return table

    # -- conversational entry point ------------------------------------

    def ask(self, mode: str, question: str, session_id: str | None = None) -> dict:
        """Run one conversational turn; returns the wire-format response
        shared by CLI and HTTP."""
        if session_id is None:
            session = self.store.create(mode)
        else:
            session = self.store.get(session_id)
        with self.store.lock(session.id):
            if mode == "docs":
                return self._ask_docs(session, question)
            if mode == "fql":
                return self._ask_fql(session, question)
            return self._ask_metadata(session, question)

    def _persist_pair(self, session) -> None:
        for turn in session.turns[-2:]:
            self.store.append_turn(session.id, turn)

    def _ask_fql(self, session, question: str) -> dict:
        result = translate_to_fql(
            question, self.lexicon, self.example_index, self.backend, k=self.config.retrieval_k
        )
        report = execute(result.query, self.snapshot, self.match_options())
        artifact = self.report_artifact(report)
        artifact["fql"] = render_fql(result.query)
        artifact["translation_source"] = result.source
        answer = _summarize_report(report)
        session.add_turn("user", question)
        session.add_turn("assistant", answer, artifacts=artifact)
        self._persist_pair(session)
        return {"answer": answer, "artifact": artifact, "session_id": session.id}

    def _ask_metadata(self, session, question: str) -> dict:
        result = translate_to_table_query(question, self.tables, self.backend)
        table = query_tables(result.query, self.tables)
        artifact = {
            "type": "table",
            **table.to_dict(),
            "sql": render_sql(result.query),
            "plan": result.query.to_dict(),
            "translation_source": result.source,
        }
        answer = f"{len(table.rows)} row(s): " + "; ".join(
            ", ".join(r) for r in table.rows[:10]
        )
        session.add_turn("user", question)
        session.add_turn("assistant", answer, artifacts=artifact)
        self._persist_pair(session)
        return {"answer": answer, "artifact": artifact, "session_id": session.id}

    def _ask_docs(self, session, question: str) -> dict:
        result = answer_with_context(
            session, question, self.doc_index(), self.backend,
            embedder=self.embedder, k=self.config.retrieval_k,
        )
        self._persist_pair(session)
        artifact = {"type": "doc_answer", **result.to_dict()}
        return {
            "answer": result.answer,
            "artifact": artifact,
            "citations": artifact["citations"],
            "session_id": session.id,
        }


def _summarize_report(report: FeatureReport) -> str:
    d = report.to_dict()
    if d["kind"] == "check":
        if d["matched"]:
            return f"Feature detected: {len(d['hits'])} matching line(s)."
        return "Feature not detected."
    if d["kind"] == "max":
        if isinstance(report, MaxReport) and report.winner is not None:
            return f"Highest matching version: {report.winner.tag}."
        return "No version-indicating feature detected."
    matched = [e["tag"] for e in d["entries"] if e["matched"]]
    if matched:
        return "Detected: " + ", ".join(str(t) for t in matched) + "."
    return "None of the enumerated features were detected."
