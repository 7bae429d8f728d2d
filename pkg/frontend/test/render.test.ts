import { describe, expect, it } from "vitest";

import { escapeHtml, renderArtifact, renderRaw } from "../src/render.js";

const checkReport = {
  type: "feature_report",
  kind: "check",
  query: "CHECK (!$OMP || pragma omp) WHERE (*) AS (OpenMP)",
  matched: true,
  tag: "OpenMP",
  hits: [
    { file: "solver.f90", line: 3, term: "!$OMP", excerpt: "  !$OMP PARALLEL DO" },
    { file: "kernel.c", line: 3, term: "pragma omp", excerpt: "#pragma omp parallel for" },
  ],
};

describe("escapeHtml", () => {
  it("neutralizes markup", () => {
    expect(escapeHtml(`<b x="1">&`)).toBe("&lt;b x=&quot;1&quot;&gt;&amp;");
  });
});

describe("renderArtifact", () => {
  it("renders a check report with query and hit table", () => {
    const html = renderArtifact(checkReport);
    expect(html).toContain("CHECK (!$OMP || pragma omp)");
    expect(html).toContain("feature detected");
    expect(html).toContain("<td>solver.f90</td>");
    expect(html).toContain("<td>3</td>");
  });

  it("renders a max report winner", () => {
    const html = renderArtifact({
      type: "feature_report",
      kind: "max",
      query: "MAX (...)",
      winner: { tag: "3.1", raw_tag: "31", hits: [] },
      checks: [],
    });
    expect(html).toContain("highest version");
    expect(html).toContain("3.1");
  });

  it("renders a max report with no winner", () => {
    const html = renderArtifact({
      type: "feature_report",
      kind: "max",
      query: "MAX (...)",
      winner: null,
      checks: [],
    });
    expect(html).toContain("no version detected");
  });

  it("renders a list report row per entry", () => {
    const html = renderArtifact({
      type: "feature_report",
      kind: "list",
      query: "LIST (...)",
      entries: [
        { tag: "Static", matched: true, hit_count: 2 },
        { tag: "Guided", matched: false, hit_count: 0 },
      ],
      checks: [],
    });
    expect(html).toContain("<td>Static</td>");
    expect(html).toContain("<td>yes</td>");
    expect(html).toContain("<td>no</td>");
  });

  it("renders language stats with a total row", () => {
    const html = renderArtifact({
      type: "language_stats",
      languages: { Fortran: { files: 1, lines: 6 }, C: { files: 1, lines: 6 } },
      total_files: 2,
      total_lines: 12,
    });
    expect(html).toContain("<td>Fortran</td>");
    expect(html).toContain("<td>total</td>");
    expect(html).toContain("<td>12</td>");
  });

  it("renders module lists, adjacency, and call graphs", () => {
    expect(renderArtifact({ type: "module_list", modules: ["a", "b"] })).toContain("2 module(s)");
    expect(
      renderArtifact({
        type: "adjacency",
        relation: "callers",
        function: "fileutils::relavu",
        functions: ["x::y"],
      }),
    ).toContain("fileutils::relavu");
    expect(
      renderArtifact({ type: "call_graph", name: "G", nodes: ["a", "b"], edges: [["a", "b"]] }),
    ).toContain("1 edge(s)");
  });

  it("renders tables with optional SQL", () => {
    const html = renderArtifact({
      type: "table",
      name: "components",
      columns: ["Component"],
      rows: [["dz"]],
      primary_key: "Component",
      sql: "SELECT Component FROM components;",
    });
    expect(html).toContain("<td>dz</td>");
    expect(html).toContain("SELECT Component");
  });

  it("renders loop matrices grouped by section", () => {
    const html = renderArtifact({
      type: "loop_matrix",
      sections: [
        { label: "A", loops: 2 },
        { label: "B", loops: 1 },
      ],
      variables: ["x"],
      cells: [["ro", "wo", "-"]],
    });
    expect(html).toContain("A (2)");
    expect(html).toContain("<td>ro wo</td>");
    expect(html).toContain("<td>-</td>");
  });

  it("renders loop usage", () => {
    const html = renderArtifact({
      type: "loop_usage",
      section: 0,
      loop: 0,
      variables: [{ name: "filter_lakec", role: "ro" }],
    });
    expect(html).toContain("filter_lakec");
    expect(html).toContain("<td>ro</td>");
  });

  it("renders doc answers with citation markers", () => {
    const html = renderArtifact({
      type: "doc_answer",
      answer: "Uses the harmonic mean.",
      citations: [{ doc_id: "lake", seq: 0 }],
    });
    expect(html).toContain("harmonic mean");
    expect(html).toContain("[lake#0]");
  });

  it("renders ingest results", () => {
    const html = renderArtifact({
      type: "ingest_result",
      corpus: "docs",
      chunks_added: 3,
      index_size: 7,
    });
    expect(html).toContain("3 chunk(s)");
    expect(html).toContain("7");
  });

  it("falls back to raw JSON for unknown types", () => {
    const weird = { type: "mystery", payload: [1, 2] };
    expect(renderArtifact(weird)).toBe(renderRaw(weird));
    expect(renderArtifact(weird)).toContain("mystery");
    expect(renderArtifact(null)).toContain("null");
  });

  it("escapes hostile content everywhere", () => {
    const html = renderArtifact({
      ...checkReport,
      hits: [{ file: "<script>", line: 1, term: "x", excerpt: "<img onerror=1>" }],
    });
    expect(html).not.toContain("<script>");
    expect(html).not.toContain("<img");
  });
});
