// Pure HTML-string renderers, one per artifact type. Keeping these free
// of DOM calls lets the test suite run them under plain node.

import type {
  Adjacency,
  CallGraph,
  DocAnswer,
  FeatureReport,
  IngestResult,
  LanguageStats,
  LoopMatrix,
  LoopUsage,
  ModuleList,
  TableArtifact,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function table(headers: string[], rows: string[][]): string {
  const head = headers.map((h) => `<th>${escapeHtml(h)}</th>`).join("");
  const body = rows
    .map((r) => `<tr>${r.map((c) => `<td>${escapeHtml(c)}</td>`).join("")}</tr>`)
    .join("");
  return `<table><thead><tr>${head}</tr></thead><tbody>${body}</tbody></table>`;
}

function hitTable(hits: { file: string; line: number; term: string; excerpt: string }[]): string {
  if (hits.length === 0) return `<p class="empty">no hits</p>`;
  return table(
    ["File", "Line", "Term", "Excerpt"],
    hits.map((h) => [h.file, String(h.line), h.term, h.excerpt]),
  );
}

export function renderFeatureReport(a: FeatureReport): string {
  const parts = [`<div class="artifact feature-report">`];
  const fql = a.fql ?? a.query;
  parts.push(`<code class="fql">${escapeHtml(fql)}</code>`);
  if (a.translation_source) {
    parts.push(`<span class="badge">${escapeHtml(a.translation_source)}</span>`);
  }
  if (a.kind === "check") {
    parts.push(`<p class="verdict">${a.matched ? "feature detected" : "not detected"}</p>`);
    parts.push(hitTable(a.hits));
  } else if (a.kind === "max") {
    parts.push(
      a.winner
        ? `<p class="verdict">highest version: <strong>${escapeHtml(a.winner.tag)}</strong></p>` +
            hitTable(a.winner.hits)
        : `<p class="verdict">no version detected</p>`,
    );
  } else {
    parts.push(
      table(
        ["Feature", "Present", "Hits"],
        a.entries.map((e) => [e.tag, e.matched ? "yes" : "no", String(e.hit_count)]),
      ),
    );
  }
  parts.push(`</div>`);
  return parts.join("\n");
}

export function renderLanguageStats(a: LanguageStats): string {
  const rows = Object.entries(a.languages).map(([lang, s]) => [
    lang,
    String(s.files),
    String(s.lines),
  ]);
  rows.push(["total", String(a.total_files), String(a.total_lines)]);
  return `<div class="artifact language-stats">${table(["Language", "Files", "Lines"], rows)}</div>`;
}

export function renderModuleList(a: ModuleList): string {
  const items = a.modules.map((m) => `<li>${escapeHtml(m)}</li>`).join("");
  return `<div class="artifact module-list"><p>${a.modules.length} module(s)</p><ul>${items}</ul></div>`;
}

export function renderAdjacency(a: Adjacency): string {
  const items = a.functions.map((f) => `<li>${escapeHtml(f)}</li>`).join("");
  return (
    `<div class="artifact adjacency"><p>${escapeHtml(a.relation)} of ` +
    `<code>${escapeHtml(a.function)}</code> (${a.functions.length})</p><ul>${items}</ul></div>`
  );
}

export function renderCallGraph(a: CallGraph): string {
  return (
    `<div class="artifact call-graph"><p>graph ${escapeHtml(a.name)}: ` +
    `${a.nodes.length} node(s), ${a.edges.length} edge(s)</p>` +
    table(["Caller", "Callee"], a.edges.map(([s, t]) => [s, t])) +
    `</div>`
  );
}

export function renderTable(a: TableArtifact): string {
  const parts = [`<div class="artifact data-table">`];
  parts.push(`<p>${escapeHtml(a.name)} (${a.rows.length} row(s))</p>`);
  parts.push(table(a.columns, a.rows));
  if (a.sql) parts.push(`<pre class="sql">${escapeHtml(a.sql)}</pre>`);
  parts.push(`</div>`);
  return parts.join("\n");
}

export function renderLoopMatrix(a: LoopMatrix): string {
  const headers = ["Variable", ...a.sections.map((s) => `${s.label} (${s.loops})`)];
  // collapse each section's loop roles into one cell per section
  const widths = a.sections.map((s) => s.loops);
  const rows = a.variables.map((v, i) => {
    const row = [v];
    let offset = 0;
    for (const w of widths) {
      row.push(a.cells[i].slice(offset, offset + w).join(" "));
      offset += w;
    }
    return row;
  });
  return `<div class="artifact loop-matrix">${table(headers, rows)}</div>`;
}

export function renderLoopUsage(a: LoopUsage): string {
  return (
    `<div class="artifact loop-usage"><p>section ${a.section}, loop ${a.loop}: ` +
    `${a.variables.length} variable(s)</p>` +
    table(["Variable", "Access"], a.variables.map((v) => [v.name, v.role])) +
    `</div>`
  );
}

export function renderDocAnswer(a: DocAnswer): string {
  const cites = a.citations
    .map((c) => `<code>[${escapeHtml(c.doc_id)}#${c.seq}]</code>`)
    .join(" ");
  return (
    `<div class="artifact doc-answer"><p>${escapeHtml(a.answer)}</p>` +
    `<p class="citations">${cites || "no citations"}</p></div>`
  );
}

export function renderIngestResult(a: IngestResult): string {
  return (
    `<div class="artifact ingest-result"><p>added ${a.chunks_added} chunk(s) to ` +
    `<code>${escapeHtml(a.corpus)}</code>; index now holds ${a.index_size}</p></div>`
  );
}

export function renderRaw(a: unknown): string {
  return `<pre class="artifact raw">${escapeHtml(JSON.stringify(a, null, 2))}</pre>`;
}

export const renderers: Record<string, (a: never) => string> = {
  feature_report: renderFeatureReport,
  language_stats: renderLanguageStats,
  module_list: renderModuleList,
  adjacency: renderAdjacency,
  call_graph: renderCallGraph,
  table: renderTable,
  loop_matrix: renderLoopMatrix,
  loop_usage: renderLoopUsage,
  doc_answer: renderDocAnswer,
  ingest_result: renderIngestResult,
};

export function renderArtifact(artifact: unknown): string {
  const type =
    artifact && typeof artifact === "object" ? (artifact as { type?: string }).type : undefined;
  const renderer = type !== undefined ? renderers[type] : undefined;
  if (!renderer) return renderRaw(artifact);
  return renderer(artifact as never);
}
