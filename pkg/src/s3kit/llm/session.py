"""Multi-round conversation sessions with a token budget."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

MODES = ("fql", "metadata", "docs")


class SessionError(Exception):
    pass


@dataclass(frozen=True)
class Turn:
    role: str  # user | assistant
    text: str
    artifacts: dict | None = None

    def to_dict(self) -> dict:
        return {"role": self.role, "text": self.text, "artifacts": self.artifacts}

    @classmethod
    def from_dict(cls, d: dict) -> "Turn":
        return cls(d["role"], d["text"], d.get("artifacts"))


@dataclass
class Session:
    id: str
    mode: str
    turns: list[Turn] = field(default_factory=list)
    token_budget: int = 2048

    def __post_init__(self):
        if self.mode not in MODES:
            raise SessionError(f"unknown session mode {self.mode!r}")

    def add_turn(self, role: str, text: str, artifacts: dict | None = None) -> Turn:
        if role not in ("user", "assistant"):
            raise SessionError(f"unknown role {role!r}")
        expected = "user" if len(self.turns) % 2 == 0 else "assistant"
        if role != expected:
            raise SessionError(f"expected a {expected} turn, got {role}")
        turn = Turn(role, text, artifacts)
        self.turns.append(turn)
        return turn

    def history_text(self, skip_oldest: int = 0) -> str:
        """Transcript prefix for prompts; `skip_oldest` drops the oldest
        turns for budget truncation."""
        lines = []
        for turn in self.turns[skip_oldest:]:
            speaker = "User" if turn.role == "user" else "Assistant"
            lines.append(f"{speaker}: {turn.text}")
        return "\n".join(lines) + "\n" if lines else ""

    def to_jsonl(self) -> str:
        header = {"session": {"id": self.id, "mode": self.mode, "token_budget": self.token_budget}}
        records = [header] + [{"turn": t.to_dict()} for t in self.turns]
        return "\n".join(json.dumps(r) for r in records) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "Session":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise SessionError("empty session record")
        header = json.loads(lines[0])["session"]
        session = cls(header["id"], header["mode"], token_budget=header["token_budget"])
        for line in lines[1:]:
            t = json.loads(line)["turn"]
            session.turns.append(Turn.from_dict(t))
        return session
