// DOM bootstrap: wires the pure renderers to the page. All view logic
// lives in render.ts / chat.ts so it stays testable without a browser.

import { ApiClient, ApiError } from "./api.js";
import { renderAskResponse, renderError, renderTranscript } from "./chat.js";
import { renderArtifact } from "./render.js";

const api = new ApiClient();
const SESSION_KEY = "s3kit-session-id";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function refreshStats(): Promise<void> {
  try {
    const stats = await api.corpusStats();
    el("stats").innerHTML = renderArtifact(stats);
  } catch {
    el("stats").innerHTML = `<p class="empty">stats unavailable</p>`;
  }
}

async function restoreSession(): Promise<void> {
  const sid = localStorage.getItem(SESSION_KEY);
  if (!sid) return;
  try {
    const session = await api.getSession(sid);
    el("chat-log").innerHTML = renderTranscript(session);
  } catch {
    localStorage.removeItem(SESSION_KEY); // stale id from a wiped server
  }
}

async function submitQuestion(): Promise<void> {
  const input = el<HTMLInputElement>("question");
  const mode = el<HTMLSelectElement>("mode").value;
  const question = input.value.trim();
  if (!question) return;
  input.value = "";
  const log = el("chat-log");
  try {
    const resp = await api.ask(question, mode, localStorage.getItem(SESSION_KEY));
    localStorage.setItem(SESSION_KEY, resp.session_id);
    log.innerHTML += renderAskResponse(question, resp);
  } catch (err) {
    if (err instanceof ApiError) log.innerHTML += renderError(err.status, err.body);
    else throw err;
  }
  log.scrollTop = log.scrollHeight;
}

async function submitFql(): Promise<void> {
  const input = el<HTMLInputElement>("fql-query");
  const query = input.value.trim();
  if (!query) return;
  try {
    const report = await api.runFql(query);
    el("fql-result").innerHTML = renderArtifact(report);
  } catch (err) {
    if (err instanceof ApiError) el("fql-result").innerHTML = renderError(err.status, err.body);
    else throw err;
  }
}

function newSession(): void {
  localStorage.removeItem(SESSION_KEY);
  el("chat-log").innerHTML = "";
}

window.addEventListener("DOMContentLoaded", () => {
  el("ask-form").addEventListener("submit", (e) => {
    e.preventDefault();
    void submitQuestion();
  });
  el("fql-form").addEventListener("submit", (e) => {
    e.preventDefault();
    void submitFql();
  });
  el("new-session").addEventListener("click", newSession);
  void refreshStats();
  void restoreSession();
});
