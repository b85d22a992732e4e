/** Mocked API documents matching docs/api.md, used by every UI test. */

import type {
  ProjectStatus,
  ReviewsResponse,
  RiverResponse,
  TopicDoc,
  WordCloudEntry,
} from "../src/types.js";

export const K = 3;
export const V = 4;

export function riverFixture(): RiverResponse {
  const slices = [];
  for (let t = 0; t < V; t++) {
    slices.push({
      version_index: t,
      version: `1.${t}`,
      widths: Array.from({ length: K }, (_, k) => (k === 0 && t === V - 1 ? 4.2 : 1.0 + 0.1 * k)),
      emerging: Array.from({ length: K }, (_, k) => k === 0 && t === V - 1),
    });
  }
  return { snapshot: 1, stale: false, river: slices };
}

export function cloudFixture(n = 30): WordCloudEntry[] {
  const labels = [
    "Strongly Negative",
    "Negative",
    "Weakly Negative",
    "Slightly Negative",
    "Slightly Positive",
    "Weakly Positive",
    "Positive",
    "Strongly Positive",
    "Neutral",
  ] as const;
  return Array.from({ length: n }, (_, i) => ({
    word: i === 0 ? "crash" : `word${i}`,
    weight: 0.3 / (i + 1),
    label: labels[i % labels.length],
  }));
}

export function topicFixture(overrides: Partial<TopicDoc> = {}): TopicDoc {
  return {
    topic_id: 0,
    top_words: cloudFixture().map((e) => [e.word, e.weight]),
    phrase_labels: [
      { text: "fix crash", count: 12, score: 0.9, sentiment_score: 0.4 },
      { text: "video load", count: 5, score: 0.5, sentiment_score: 0.1 },
    ],
    sentences: ["It crashes on launch", "Crash after the update", "Still crashing today"],
    emerging: true,
    highlight_sentences: true,
    sentiment_label: "Negative",
    scorable: true,
    word_sentiments: { crash: { score: 0.8, label: "Strongly Negative" } },
    opinion_words: ["crash"],
    word_cloud: cloudFixture(),
    prioritized_ids: [3, 1, 2],
    ...overrides,
  };
}

export function reviewsFixture(): ReviewsResponse {
  return {
    snapshot: 1,
    stale: false,
    total: 2,
    offset: 0,
    threshold: 0.2,
    reviews: [
      {
        review_id: 3,
        text: "App crashes on open <always>",
        rating: 1.0,
        post_date: "2021-03-09",
        version: "1.3",
        region: "US",
        relevance: 0.91,
        highlights: [{ start: 4, end: 11, word: "crash", label: "Strongly Negative" }],
      },
      {
        review_id: 1,
        text: "quite nice video player",
        rating: 5.0,
        post_date: "2021-03-01",
        version: "1.3",
        region: "GB",
        relevance: 0.44,
        highlights: [],
      },
    ],
  };
}

export function statusFixture(overrides: Partial<ProjectStatus> = {}): ProjectStatus {
  return {
    project_id: "abc123",
    name: "demo",
    status: "done",
    failure_reason: null,
    files: ["conllu", "reviews"],
    snapshot: 1,
    stale: false,
    config: {
      K: 3,
      W: 2,
      review_threshold: 0.2,
      emergence_lambda: 2.0,
      chain_decay: 0.5,
      prior_strength: 10.0,
      topic_alpha: null,
      topic_beta0: 0.01,
      topic_iterations: 500,
      embedding_dim: 100,
      embedding_window: 5,
      embedding_negatives: 5,
      embedding_epochs: 5,
      embedding_lr0: 0.025,
      embedding_min_count: 5,
      seed: 42,
      river_orientation: "negative-wide",
      seed_additions: [],
    },
    ...overrides,
  };
}
