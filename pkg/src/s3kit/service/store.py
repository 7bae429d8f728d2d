"""Session persistence: one append-only JSONL file per session.
Replaying a file reconstructs the session exactly."""

from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path

from ..llm.session import Session, Turn


class UnknownSession(Exception):
    pass


class SessionStore:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._global = threading.Lock()
        for path in sorted(self.directory.glob("*.jsonl")):
            session = Session.from_jsonl(path.read_text(encoding="utf-8"))
            self._sessions[session.id] = session

    def _path(self, session_id: str) -> Path:
        return self.directory / f"{session_id}.jsonl"

    def lock(self, session_id: str) -> threading.Lock:
        with self._global:
            return self._locks.setdefault(session_id, threading.Lock())

    def create(self, mode: str, token_budget: int = 2048, session_id: str | None = None) -> Session:
        session_id = session_id or uuid.uuid4().hex[:12]
        session = Session(session_id, mode, token_budget=token_budget)
        with self._global:
            self._sessions[session_id] = session
        header = {"session": {"id": session.id, "mode": session.mode, "token_budget": token_budget}}
        self._path(session_id).write_text(json.dumps(header) + "\n", encoding="utf-8")
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSession(f"no session with id {session_id!r}") from None

    def ids(self) -> list[str]:
        return sorted(self._sessions)

    def append_turn(self, session_id: str, turn: Turn) -> None:
        """Persist a turn already added to the in-memory session."""
        with self._path(session_id).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps({"turn": turn.to_dict()}) + "\n")
