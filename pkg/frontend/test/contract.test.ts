// Contract test: the renderer registry must cover every artifact type
// declared by the server's schema document, so a raw-JSON fallback in
// production always means a genuinely new server version.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { renderers } from "../src/render.js";

const here = dirname(fileURLToPath(import.meta.url));
const schemaPath = join(here, "..", "..", "docs", "artifact_schema.json");
const schema = JSON.parse(readFileSync(schemaPath, "utf-8"));

describe("artifact schema contract", () => {
  it("declares at least the known artifact families", () => {
    expect(Object.keys(schema.artifacts).length).toBeGreaterThanOrEqual(10);
  });

  it("has a renderer for every declared artifact type", () => {
    for (const type of Object.keys(schema.artifacts)) {
      expect(renderers[type], `missing renderer for ${type}`).toBeTypeOf("function");
    }
  });

  it("has no renderer for undeclared types", () => {
    for (const type of Object.keys(renderers)) {
      expect(schema.artifacts[type], `renderer ${type} not in schema`).toBeDefined();
    }
  });

  it("documents the endpoints the client calls", () => {
    for (const endpoint of [
      "POST /api/ask",
      "POST /api/fql",
      "GET /api/corpus/stats",
      "POST /api/ingest",
      "GET /api/sessions/{id}",
    ]) {
      expect(schema.endpoints[endpoint]).toBeDefined();
    }
  });
});
