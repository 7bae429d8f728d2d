// Thin client for the five JSON endpoints. The fetch function is
// injectable so tests can run without a server.

import type { AskResponse, LanguageStats, IngestResult, SessionPayload } from "./types.js";

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: Record<string, unknown>,
  ) {
    super(typeof body.error === "string" ? body.error : `HTTP ${status}`);
  }

  get fallbackQuery(): string | null {
    return typeof this.body.fallback_query === "string" ? this.body.fallback_query : null;
  }
}

export class ApiClient {
  constructor(
    private base: string = "",
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(method: string, path: string, payload?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
    if (payload !== undefined) init.body = JSON.stringify(payload);
    const resp = await this.fetchFn(this.base + path, init);
    const body = await resp.json();
    if (!resp.ok) throw new ApiError(resp.status, body);
    return body as T;
  }

  ask(question: string, mode: string, sessionId?: string | null): Promise<AskResponse> {
    return this.request("POST", "/api/ask", {
      question,
      mode,
      session_id: sessionId ?? null,
    });
  }

  runFql(query: string, root?: string): Promise<Record<string, unknown>> {
    const payload: Record<string, unknown> = { query };
    if (root) payload.root = root;
    return this.request("POST", "/api/fql", payload);
  }

  corpusStats(): Promise<LanguageStats> {
    return this.request("GET", "/api/corpus/stats");
  }

  ingest(files: string[]): Promise<IngestResult> {
    return this.request("POST", "/api/ingest", { files });
  }

  getSession(id: string): Promise<SessionPayload> {
    return this.request("GET", `/api/sessions/${encodeURIComponent(id)}`);
  }
}
