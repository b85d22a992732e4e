import { escapeHtml } from "../html.js";
import type { ProjectConfig, ProjectStatus } from "../types.js";

/** Client-side range checks mirroring the server's config invariants; the
 * server remains the authority and its 422 reports are shown inline. */
export function validateConfig(values: Partial<ProjectConfig>): string[] {
  const errors: string[] = [];
  const check = (ok: boolean, message: string) => {
    if (!ok) errors.push(message);
  };
  if (values.K !== undefined) check(Number.isInteger(values.K) && values.K >= 2, "K must be an integer >= 2");
  if (values.W !== undefined) check(Number.isInteger(values.W) && values.W >= 0, "W must be an integer >= 0");
  if (values.review_threshold !== undefined)
    check(values.review_threshold >= 0 && values.review_threshold <= 1, "review threshold must be in [0, 1]");
  if (values.emergence_lambda !== undefined)
    check(values.emergence_lambda >= 0, "lambda must be >= 0");
  if (values.chain_decay !== undefined)
    check(values.chain_decay > 0 && values.chain_decay <= 1, "chain decay must be in (0, 1]");
  if (values.topic_iterations !== undefined)
    check(Number.isInteger(values.topic_iterations) && values.topic_iterations >= 1, "iterations must be >= 1");
  if (values.embedding_dim !== undefined)
    check(Number.isInteger(values.embedding_dim) && values.embedding_dim >= 1, "embedding dim must be >= 1");
  if (values.river_orientation !== undefined)
    check(
      values.river_orientation === "negative-wide" || values.river_orientation === "positive-wide",
      "river orientation must be negative-wide or positive-wide",
    );
  for (const addition of values.seed_additions ?? []) {
    check(
      Array.isArray(addition) && addition.length === 2 && (addition[1] === "positive" || addition[1] === "negative"),
      `bad seed addition: ${JSON.stringify(addition)}`,
    );
  }
  return errors;
}

function numberField(name: string, label: string, value: number, attrs = ""): string {
  return (
    `<label class="config-field">${escapeHtml(label)} ` +
    `<input name="${name}" type="number" value="${value}" ${attrs}></label>`
  );
}

/** Parameter form + seed-word entry + run button. The run button reflects
 * the latest run status; a stale banner shows after seed/config edits until
 * the next run completes. */
export function renderConfigForm(status: ProjectStatus, errors: string[] = []): string {
  const config = status.config;
  const running = status.status === "running";
  const staleBanner = status.stale
    ? '<div class="stale-banner">settings changed - run again to refresh the snapshot</div>'
    : "";
  const failure = status.failure_reason
    ? `<div class="run-failure">${escapeHtml(status.failure_reason)}</div>`
    : "";
  const errorList = errors.length
    ? `<ul class="config-errors">${errors.map((e) => `<li>${escapeHtml(e)}</li>`).join("")}</ul>`
    : "";
  return [
    `<form class="config-form" data-status="${status.status}">`,
    staleBanner,
    failure,
    errorList,
    numberField("K", "topics (K)", config.K, 'min="2" step="1"'),
    numberField("W", "previous versions (W)", config.W, 'min="0" step="1"'),
    numberField("review_threshold", "review threshold", config.review_threshold, 'min="0" max="1" step="0.01"'),
    numberField("emergence_lambda", "emergence lambda", config.emergence_lambda, 'min="0" step="0.1"'),
    `<label class="config-field">river orientation ` +
      `<select name="river_orientation">` +
      `<option value="negative-wide"${config.river_orientation === "negative-wide" ? " selected" : ""}>negative-wide</option>` +
      `<option value="positive-wide"${config.river_orientation === "positive-wide" ? " selected" : ""}>positive-wide</option>` +
      `</select></label>`,
    `<fieldset class="seed-entry"><legend>add seed word</legend>`,
    `<input name="seed_word" placeholder="word">`,
    `<select name="seed_polarity"><option value="positive">positive</option><option value="negative">negative</option></select>`,
    `<button type="button" class="add-seed">add</button>`,
    `</fieldset>`,
    `<button type="submit" class="run-button"${running ? " disabled" : ""}>` +
      `${running ? "running..." : "run"}</button>`,
    `</form>`,
  ].join("\n");
}
