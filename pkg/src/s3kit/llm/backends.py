"""Chat backends: the single entry point is complete(prompt, params).

MockBackend answers from a script (ordered responses and/or responses
keyed by prompt fingerprint) so every pipeline is testable offline;
GenericHttpBackend talks to any chat-completions-style JSON endpoint.
"""

from __future__ import annotations

import hashlib
import os
from collections import deque
from dataclasses import dataclass, field

import requests

CHARS_PER_TOKEN = 4  # coarse safety-margin estimate, not a tokenizer


class BackendError(Exception):
    def __init__(self, backend_id: str, message: str):
        self.backend_id = backend_id
        super().__init__(f"backend {backend_id!r}: {message}")


@dataclass(frozen=True)
class Capabilities:
    max_context_tokens: int = 4096


@dataclass(frozen=True)
class CompletionParams:
    temperature: float = 0.2
    max_tokens: int = 1024


def prompt_fingerprint(prompt: str) -> str:
    return hashlib.sha256(prompt.encode("utf-8")).hexdigest()[:16]


class MockBackend:
    """Deterministic canned backend.

    Responses come from an ordered script (consumed first) or from a
    fingerprint-keyed table; with neither, the default response is
    returned. All prompts seen are recorded for test introspection.
    """

    def __init__(
        self,
        script: list[str] | None = None,
        keyed: dict[str, str] | None = None,
        default: str = "",
        max_context_tokens: int = 4096,
    ):
        self.id = "mock"
        self.capabilities = Capabilities(max_context_tokens)
        self._script: deque[str] = deque(script or [])
        self._keyed = dict(keyed or {})
        self._default = default
        self.prompts: list[str] = []

    def script(self, responses: list[str]) -> "MockBackend":
        self._script.extend(responses)
        return self

    def set_response(self, fingerprint: str, text: str) -> None:
        self._keyed[fingerprint] = text

    def complete(self, prompt: str, params: CompletionParams = CompletionParams()) -> str:
        self.prompts.append(prompt)
        if self._script:
            return self._script.popleft()
        return self._keyed.get(prompt_fingerprint(prompt), self._default)


@dataclass
class GenericHttpBackend:
    """Chat-completions-style endpoint:
    POST {model, messages, temperature, max_tokens}
      -> {choices: [{message: {content}}]}.
    """

    url: str
    model: str = "default"
    api_key_env: str | None = None
    max_context_tokens: int = 4096
    timeout: float = 120.0
    capabilities: Capabilities = field(init=False)

    def __post_init__(self):
        self.id = f"http:{self.model}"
        self.capabilities = Capabilities(self.max_context_tokens)

    def complete(self, prompt: str, params: CompletionParams = CompletionParams()) -> str:
        headers = {}
        if self.api_key_env:
            key = os.environ.get(self.api_key_env, "")
            if key:
                headers["Authorization"] = f"Bearer {key}"
        payload = {
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": params.temperature,
            "max_tokens": params.max_tokens,
        }
        try:
            resp = requests.post(self.url, json=payload, headers=headers, timeout=self.timeout)
            resp.raise_for_status()
            data = resp.json()
            return data["choices"][0]["message"]["content"]
        except (requests.RequestException, KeyError, IndexError, ValueError) as exc:
            raise BackendError(self.id, str(exc)) from exc


def estimate_tokens(text: str) -> int:
    return (len(text) + CHARS_PER_TOKEN - 1) // CHARS_PER_TOKEN
