import type { CloudLabel } from "./types.js";

/** The single source of color truth: 8 scale labels + the neutral marker map
 * to 9 distinct colors, shared by cloud, glimpse and review-table
 * highlights. Green end = positive, red end = negative, gray = unscored. */
export const SENTIMENT_PALETTE: Record<CloudLabel, string> = {
  "Strongly Positive": "#1b7837",
  "Positive": "#41ab5d",
  "Weakly Positive": "#78c679",
  "Slightly Positive": "#c2e699",
  "Slightly Negative": "#fee08b",
  "Weakly Negative": "#fdae61",
  "Negative": "#f46d43",
  "Strongly Negative": "#d73027",
  "Neutral": "#9e9e9e",
};

export function sentimentColor(label: CloudLabel): string {
  return SENTIMENT_PALETTE[label] ?? SENTIMENT_PALETTE.Neutral;
}

/** Categorical colors for river branches (cycled when K > 10). */
export const BRANCH_PALETTE = [
  "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
];

export function branchColor(topicId: number): string {
  return BRANCH_PALETTE[topicId % BRANCH_PALETTE.length];
}

/** Background for sentences of an emerging topic. */
export const EMERGING_HIGHLIGHT = "#fff59d";
