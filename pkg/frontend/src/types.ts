// Wire types mirroring docs/artifact_schema.json. Every artifact carries
// a `type` discriminator; unknown types fall back to raw JSON display.

export interface Hit {
  file: string;
  line: number;
  term: string;
  excerpt: string;
}

export interface CheckReport {
  type: "feature_report";
  kind: "check";
  query: string;
  matched: boolean;
  tag: string | null;
  hits: Hit[];
  fql?: string;
  translation_source?: string;
}

export interface MaxWinner {
  tag: string;
  raw_tag: string;
  hits: Hit[];
}

export interface MaxReport {
  type: "feature_report";
  kind: "max";
  query: string;
  winner: MaxWinner | null;
  checks: CheckReport[];
  fql?: string;
  translation_source?: string;
}

export interface ListEntry {
  tag: string;
  matched: boolean;
  hit_count: number;
}

export interface ListReport {
  type: "feature_report";
  kind: "list";
  query: string;
  entries: ListEntry[];
  checks: CheckReport[];
  fql?: string;
  translation_source?: string;
}

export type FeatureReport = CheckReport | MaxReport | ListReport;

export interface LanguageStats {
  type: "language_stats";
  languages: Record<string, { files: number; lines: number }>;
  total_files: number;
  total_lines: number;
}

export interface ModuleList {
  type: "module_list";
  modules: string[];
}

export interface Adjacency {
  type: "adjacency";
  relation: "callers" | "callees";
  function: string;
  functions: string[];
}

export interface CallGraph {
  type: "call_graph";
  name: string;
  nodes: string[];
  edges: [string, string][];
}

export interface TableArtifact {
  type: "table";
  name: string;
  columns: string[];
  rows: string[][];
  primary_key: string | null;
  sql?: string;
  translation_source?: string;
}

export interface LoopMatrix {
  type: "loop_matrix";
  sections: { label: string; loops: number }[];
  variables: string[];
  cells: string[][];
}

export interface LoopUsage {
  type: "loop_usage";
  section: number;
  loop: number;
  variables: { name: string; role: string }[];
}

export interface DocAnswer {
  type: "doc_answer";
  answer: string;
  citations: { doc_id: string; seq: number }[];
}

export interface IngestResult {
  type: "ingest_result";
  corpus: string;
  chunks_added: number;
  index_size: number;
}

export type Artifact =
  | FeatureReport
  | LanguageStats
  | ModuleList
  | Adjacency
  | CallGraph
  | TableArtifact
  | LoopMatrix
  | LoopUsage
  | DocAnswer
  | IngestResult;

export interface AskResponse {
  answer: string;
  artifact: Artifact & Record<string, unknown>;
  citations?: { doc_id: string; seq: number }[];
  session_id: string;
}

export interface SessionTurn {
  role: "user" | "assistant";
  text: string;
  artifacts: Record<string, unknown> | null;
}

export interface SessionPayload {
  id: string;
  mode: string;
  token_budget: number;
  turns: SessionTurn[];
}
