"""HTTP JSON API over the shared engine. Error mapping: 400 schema
violation, 404 unknown session, 422 translation failure (body carries
the parse error and fallback status), 502 backend failure."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from ..fql.ast import FqlError
from ..llm.backends import BackendError
from ..llm.translate import NoLexiconMatch, TranslationError, synthesize_fql
from ..metadata.tables import TableError
from ..ragdoc.index import EmptyIndex
from .core import Engine
from .store import UnknownSession


class AskRequest(BaseModel):
    question: str
    mode: str = "fql"
    session_id: str | None = None


class FqlRequest(BaseModel):
    query: str
    root: str | None = None


class IngestRequest(BaseModel):
    files: list[str]


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="s3kit", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def bad_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "schema violation", "detail": exc.errors()})

    @app.exception_handler(UnknownSession)
    async def unknown_session(request: Request, exc: UnknownSession):
        return JSONResponse(status_code=404, content={"error": str(exc)})

    @app.exception_handler(BackendError)
    async def backend_error(request: Request, exc: BackendError):
        return JSONResponse(status_code=502, content={"error": str(exc), "backend": exc.backend_id})

    def translation_failure(question: str, exc: Exception) -> JSONResponse:
        fallback = None
        try:
            from ..fql.ast import render_fql

            fallback = render_fql(synthesize_fql(question, engine.lexicon))
        except NoLexiconMatch:
            pass
        return JSONResponse(
            status_code=422,
            content={"error": str(exc), "fallback_query": fallback},
        )

    @app.post("/api/ask")
    async def ask(body: AskRequest):
        if body.mode not in ("fql", "metadata", "docs"):
            return JSONResponse(status_code=400, content={"error": f"unknown mode {body.mode!r}"})
        try:
            return engine.ask(body.mode, body.question, body.session_id)
        except (TranslationError, NoLexiconMatch, TableError, EmptyIndex) as exc:
            return translation_failure(body.question, exc)

    @app.post("/api/fql")
    async def fql(body: FqlRequest):
        try:
            if body.root:
                from ..corpus import ExclusionRules, scan_tree

                snap = scan_tree(body.root, ExclusionRules(engine.config.exclude_globs,
                                                           engine.config.max_file_bytes))
                return engine.run_fql(body.query, snap)
            return engine.run_fql(body.query)
        except FqlError as exc:
            return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.get("/api/corpus/stats")
    async def corpus_stats():
        return engine.stats_artifact()

    @app.post("/api/ingest")
    async def ingest(body: IngestRequest):
        missing = [f for f in body.files if not Path(f).is_file()]
        if missing:
            return JSONResponse(status_code=400, content={"error": f"files not found: {missing}"})
        return engine.ingest(body.files)

    @app.get("/api/sessions/{session_id}")
    async def get_session(session_id: str):
        session = engine.store.get(session_id)
        return {
            "id": session.id,
            "mode": session.mode,
            "token_budget": session.token_budget,
            "turns": [t.to_dict() for t in session.turns],
        }

    static_dir = engine.config.server.static_dir
    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
