/** Wire types mirroring docs/api.md. The UI never derives analytics from
 * these; it only projects server fields onto the screen. */

export type SentimentLabel =
  | "Strongly Positive"
  | "Positive"
  | "Weakly Positive"
  | "Slightly Positive"
  | "Slightly Negative"
  | "Weakly Negative"
  | "Negative"
  | "Strongly Negative";

export type CloudLabel = SentimentLabel | "Neutral";

export interface RiverSlice {
  version_index: number;
  version: string;
  widths: number[];
  emerging: boolean[];
}

export interface RiverResponse {
  snapshot: number;
  stale: boolean;
  river: RiverSlice[];
}

export interface PhraseLabel {
  text: string;
  count: number;
  score: number;
  sentiment_score: number;
}

export interface WordCloudEntry {
  word: string;
  weight: number;
  label: CloudLabel;
}

export interface TopicDoc {
  topic_id: number;
  top_words: [string, number][];
  phrase_labels: PhraseLabel[];
  sentences: string[];
  emerging: boolean;
  highlight_sentences: boolean;
  sentiment_label: SentimentLabel;
  scorable: boolean;
  word_sentiments: Record<string, { score: number; label: SentimentLabel }>;
  opinion_words: string[];
  word_cloud: WordCloudEntry[];
  prioritized_ids: number[];
}

export interface TopicResponse {
  snapshot: number;
  stale: boolean;
  version: string;
  version_index: number;
  topic: TopicDoc;
}

export interface ReviewHighlight {
  start: number;
  end: number;
  word: string;
  label: CloudLabel;
}

export interface ReviewRow {
  review_id: number;
  text: string;
  rating: number;
  post_date: string;
  version: string;
  region: string;
  relevance: number;
  highlights: ReviewHighlight[];
}

export interface ReviewsResponse {
  snapshot: number;
  stale: boolean;
  total: number;
  offset: number;
  threshold: number;
  reviews: ReviewRow[];
}

export interface ProjectStatus {
  project_id: string;
  name: string;
  status: "idle" | "running" | "done" | "failed";
  failure_reason: string | null;
  files: string[];
  snapshot: number | null;
  stale: boolean;
  config: ProjectConfig;
}

export interface ProjectConfig {
  K: number;
  W: number;
  review_threshold: number;
  emergence_lambda: number;
  chain_decay: number;
  prior_strength: number;
  topic_alpha: number | null;
  topic_beta0: number;
  topic_iterations: number;
  embedding_dim: number;
  embedding_window: number;
  embedding_negatives: number;
  embedding_epochs: number;
  embedding_lr0: number;
  embedding_min_count: number;
  seed: number;
  river_orientation: "negative-wide" | "positive-wide";
  seed_additions: [string, string][];
}

export interface ReviewFilters {
  text: string | null;
  minRating: number | null;
  dateFrom: string | null;
  dateTo: string | null;
}
