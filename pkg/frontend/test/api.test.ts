import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

interface Recorded {
  url: string;
  method?: string;
  body?: unknown;
}

function fakeFetch(status: number, body: unknown, log: Recorded[] = []) {
  return async (url: string, init?: RequestInit): Promise<Response> => {
    log.push({
      url,
      method: init?.method,
      body: init?.body ? JSON.parse(init.body as string) : undefined,
    });
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => body,
    } as Response;
  };
}

describe("ApiClient", () => {
  it("posts ask requests with the session id", async () => {
    const log: Recorded[] = [];
    const client = new ApiClient(
      "",
      fakeFetch(200, { answer: "a", artifact: { type: "doc_answer" }, session_id: "s1" }, log),
    );
    const resp = await client.ask("openmp?", "fql", "s1");
    expect(resp.session_id).toBe("s1");
    expect(log[0]).toEqual({
      url: "/api/ask",
      method: "POST",
      body: { question: "openmp?", mode: "fql", session_id: "s1" },
    });
  });

  it("omits the root when not given", async () => {
    const log: Recorded[] = [];
    const client = new ApiClient("", fakeFetch(200, { type: "feature_report" }, log));
    await client.runFql("CHECK (x) WHERE (*)");
    expect(log[0].body).toEqual({ query: "CHECK (x) WHERE (*)" });
  });

  it("prefixes the base URL and encodes session ids", async () => {
    const log: Recorded[] = [];
    const client = new ApiClient("http://h:1", fakeFetch(200, { id: "a b", turns: [] }, log));
    await client.getSession("a b");
    expect(log[0].url).toBe("http://h:1/api/sessions/a%20b");
  });

  it("raises ApiError with the response body on failure", async () => {
    const client = new ApiClient(
      "",
      fakeFetch(422, { error: "no query found", fallback_query: "CHECK (x) WHERE (*)" }),
    );
    const err = await client.runFql("junk").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(422);
    expect(err.message).toBe("no query found");
    expect(err.fallbackQuery).toBe("CHECK (x) WHERE (*)");
  });

  it("fallbackQuery is null when absent", async () => {
    const client = new ApiClient("", fakeFetch(404, { error: "no session" }));
    const err = await client.getSession("ghost").catch((e) => e);
    expect(err.fallbackQuery).toBeNull();
  });

  it("gets corpus stats and posts ingest files", async () => {
    const log: Recorded[] = [];
    const client = new ApiClient("", fakeFetch(200, { type: "language_stats" }, log));
    await client.corpusStats();
    await client.ingest(["a.md"]);
    expect(log[0]).toMatchObject({ url: "/api/corpus/stats", method: "GET" });
    expect(log[1]).toMatchObject({ url: "/api/ingest", body: { files: ["a.md"] } });
  });
});
