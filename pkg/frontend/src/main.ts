/** Browser glue: wires the API client, view store and render functions onto
 * the page. All logic that matters lives in the imported modules; this file
 * only moves strings into the DOM and events back out. */

import { ApiClient, ApiError } from "./api.js";
import { renderConfigForm, validateConfig } from "./render/config_form.js";
import { renderGlimpse } from "./render/glimpse.js";
import { renderFilterControls, renderReviewTable } from "./render/reviews.js";
import { renderRiver, riverHoverText } from "./render/river.js";
import { ViewStore } from "./state.js";
import type { ProjectConfig, RiverResponse, TopicResponse } from "./types.js";

const api = new ApiClient("");
const store = new ViewStore();

const el = (id: string) => document.getElementById(id) as HTMLElement;

let lastRiver: RiverResponse | null = null;
let phraseLabelsByNode = new Map<string, string[]>();

async function refreshRiver(): Promise<void> {
  const { projectId } = store.state;
  if (!projectId) return;
  const { seq, signal } = store.begin();
  try {
    const river = await api.getRiver(projectId, signal);
    if (!store.isCurrent(seq)) return;
    lastRiver = river;
    store.clampToSnapshot(river);
    el("river-panel").innerHTML = renderRiver(river.river, (t, k) => {
      const labels = phraseLabelsByNode.get(`${t}:${k}`) ?? [];
      return riverHoverText(river.river[t].version, k, labels);
    });
    bindRiverClicks();
  } catch (err) {
    if (!(err instanceof DOMException && err.name === "AbortError")) showError(err);
  }
}

function bindRiverClicks(): void {
  el("river-panel")
    .querySelectorAll<SVGElement>(".river-node")
    .forEach((node) => {
      node.addEventListener("click", () => {
        const t = Number(node.dataset.version);
        const k = Number(node.dataset.topic);
        store.selectTopic(t, k);
        void openGlimpse();
      });
    });
}

async function openGlimpse(): Promise<void> {
  const { projectId, versionIndex, topicId } = store.state;
  if (projectId === null || versionIndex === null || topicId === null) return;
  const { seq, signal } = store.begin();
  try {
    const topic: TopicResponse = await api.getTopic(projectId, versionIndex, topicId, signal);
    if (!store.isCurrent(seq)) return;
    phraseLabelsByNode.set(
      `${versionIndex}:${topicId}`,
      topic.topic.phrase_labels.map((p) => p.text),
    );
    el("glimpse-panel").innerHTML = renderGlimpse(topic.topic, topic.version);
    await refreshReviews();
  } catch (err) {
    if (!(err instanceof DOMException && err.name === "AbortError")) showError(err);
  }
}

async function refreshReviews(): Promise<void> {
  const { projectId, versionIndex, topicId, filters, thresholdOverride } = store.state;
  if (projectId === null || versionIndex === null || topicId === null) return;
  const { seq, signal } = store.begin();
  try {
    const listing = await api.getReviews(
      projectId, versionIndex, topicId, filters, thresholdOverride, 0, 100, signal,
    );
    if (!store.isCurrent(seq)) return;
    el("filters-panel").innerHTML = renderFilterControls(filters, listing.threshold);
    el("reviews-panel").innerHTML = renderReviewTable(listing);
    bindFilterEvents();
  } catch (err) {
    if (!(err instanceof DOMException && err.name === "AbortError")) showError(err);
  }
}

function bindFilterEvents(): void {
  const form = el("filters-panel").querySelector<HTMLFormElement>(".review-filters");
  if (!form) return;
  form.addEventListener("change", () => {
    const data = new FormData(form);
    store.setFilters({
      text: (data.get("text") as string) || null,
      minRating: data.get("min_rating") ? Number(data.get("min_rating")) : null,
      dateFrom: (data.get("date_from") as string) || null,
      dateTo: (data.get("date_to") as string) || null,
    });
    store.setThresholdOverride(data.get("threshold") ? Number(data.get("threshold")) : null);
    void refreshReviews();
  });
  form.addEventListener("submit", (e) => e.preventDefault());
}

async function refreshStatus(): Promise<void> {
  const { projectId } = store.state;
  if (!projectId) return;
  const status = await api.getStatus(projectId);
  el("config-panel").innerHTML = renderConfigForm(status);
  const form = el("config-panel").querySelector<HTMLFormElement>(".config-form");
  if (!form) return;
  form.addEventListener("submit", async (e) => {
    e.preventDefault();
    const data = new FormData(form);
    const values: Partial<ProjectConfig> = {
      K: Number(data.get("K")),
      W: Number(data.get("W")),
      review_threshold: Number(data.get("review_threshold")),
      emergence_lambda: Number(data.get("emergence_lambda")),
      river_orientation: data.get("river_orientation") as ProjectConfig["river_orientation"],
    };
    const errors = validateConfig(values);
    if (errors.length) {
      el("config-panel").innerHTML = renderConfigForm(status, errors);
      return;
    }
    try {
      await api.putConfig(projectId, values);
      await api.run(projectId);
      void pollUntilDone();
    } catch (err) {
      showError(err);
    }
  });
  form.querySelector(".add-seed")?.addEventListener("click", async () => {
    const data = new FormData(form);
    const word = (data.get("seed_word") as string)?.trim();
    const polarity = data.get("seed_polarity") as string;
    if (!word) return;
    try {
      await api.putSeeds(projectId, [[word, polarity]]);
      await refreshStatus();
    } catch (err) {
      showError(err);
    }
  });
}

async function pollUntilDone(): Promise<void> {
  const { projectId } = store.state;
  if (!projectId) return;
  const status = await api.getStatus(projectId);
  await refreshStatus();
  if (status.status === "running") {
    setTimeout(() => void pollUntilDone(), 500);
    return;
  }
  if (status.status === "done") {
    await refreshRiver();
    if (store.state.topicId !== null) await openGlimpse();
  }
}

function showError(err: unknown): void {
  const message =
    err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
  el("error-panel").textContent = message;
}

async function boot(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const projectId = params.get("project");
  if (!projectId) {
    el("error-panel").textContent = "open with ?project=<id> (create one via the API or CLI)";
    return;
  }
  store.selectProject(projectId);
  await refreshStatus();
  await refreshRiver();
}

window.addEventListener("DOMContentLoaded", () => void boot());
