"""Service configuration: one JSON file, validated at startup before any
server bind or corpus scan."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..ragdoc.chunking import ChunkConfig


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class BackendConfig:
    kind: str = "mock"  # mock | http
    url: str | None = None
    api_key_env: str | None = None
    model: str = "default"
    max_context_tokens: int = 4096

    def __post_init__(self):
        if self.kind not in ("mock", "http"):
            raise ConfigError(f"backend.kind must be 'mock' or 'http', got {self.kind!r}")
        if self.kind == "http" and not self.url:
            raise ConfigError("backend.kind 'http' requires backend.url")


@dataclass(frozen=True)
class ServerConfig:
    bind_address: str = "127.0.0.1"
    port: int = 8000
    static_dir: str | None = None
    bearer_token: str | None = None


@dataclass(frozen=True)
class Config:
    corpus_root: str = "."
    index_dir: str = "indexes"
    sessions_dir: str = "sessions"
    backend: BackendConfig = field(default_factory=BackendConfig)
    chunking: ChunkConfig = field(default_factory=ChunkConfig)
    retrieval_k: int = 4
    case_sensitive: bool = False
    server: ServerConfig = field(default_factory=ServerConfig)
    exclude_globs: tuple[str, ...] = ()
    max_file_bytes: int = 4 * 1024 * 1024

    @classmethod
    def from_dict(cls, d: dict) -> "Config":
        try:
            return cls(
                corpus_root=d.get("corpus_root", "."),
                index_dir=d.get("index_dir", "indexes"),
                sessions_dir=d.get("sessions_dir", "sessions"),
                backend=BackendConfig(**d.get("backend", {})),
                chunking=ChunkConfig(**d.get("chunking", {})),
                retrieval_k=int(d.get("retrieval", {}).get("k", 4)),
                case_sensitive=bool(d.get("match", {}).get("case_sensitive", False)),
                server=ServerConfig(**d.get("server", {})),
                exclude_globs=tuple(d.get("exclude_globs", [])),
                max_file_bytes=int(d.get("max_file_bytes", 4 * 1024 * 1024)),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad configuration: {exc}") from exc

    @classmethod
    def load(cls, path: str | Path) -> "Config":
        p = Path(path)
        if not p.is_file():
            raise ConfigError(f"config file not found: {path}")
        try:
            data = json.loads(p.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def validate_paths(self) -> None:
        if not Path(self.corpus_root).is_dir():
            raise ConfigError(f"corpus_root does not exist: {self.corpus_root}")
