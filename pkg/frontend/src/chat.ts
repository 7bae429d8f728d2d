// Pure view logic for the chat transcript: turning API responses and
// replayed sessions into HTML, independent of any DOM wiring.

import { escapeHtml, renderArtifact } from "./render.js";
import type { AskResponse, SessionPayload, SessionTurn } from "./types.js";

export function renderUserTurn(text: string): string {
  return `<div class="turn user"><span class="who">you</span><p>${escapeHtml(text)}</p></div>`;
}

export function renderAssistantTurn(text: string, artifact: unknown): string {
  const body = [`<div class="turn assistant"><span class="who">s3kit</span>`];
  body.push(`<p>${escapeHtml(text)}</p>`);
  if (artifact !== null && artifact !== undefined) {
    body.push(renderArtifact(artifact));
  }
  body.push(`</div>`);
  return body.join("\n");
}

export function renderAskResponse(question: string, resp: AskResponse): string {
  return renderUserTurn(question) + "\n" + renderAssistantTurn(resp.answer, resp.artifact);
}

function renderTurn(turn: SessionTurn): string {
  return turn.role === "user"
    ? renderUserTurn(turn.text)
    : renderAssistantTurn(turn.text, turn.artifacts);
}

export function renderTranscript(session: SessionPayload): string {
  const header =
    `<div class="session-header">session <code>${escapeHtml(session.id)}</code> ` +
    `(${escapeHtml(session.mode)} mode)</div>`;
  return [header, ...session.turns.map(renderTurn)].join("\n");
}

export function renderError(status: number, body: Record<string, unknown>): string {
  const parts = [`<div class="turn error"><p>error ${status}: ${escapeHtml(String(body.error ?? ""))}</p>`];
  if (typeof body.fallback_query === "string") {
    parts.push(`<p>try this query instead:</p><code class="fql">${escapeHtml(body.fallback_query)}</code>`);
  }
  parts.push(`</div>`);
  return parts.join("\n");
}
