import { escapeHtml } from "../html.js";
import { EMERGING_HIGHLIGHT, sentimentColor } from "../palette.js";
import type { TopicDoc, WordCloudEntry } from "../types.js";

export const CLOUD_LIMIT = 30;
const MIN_FONT_PX = 12;
const MAX_FONT_PX = 34;

/** Word cloud spans: font size scales linearly with the server-sent weight,
 * color comes from the shared sentiment palette (gray Neutral for unscored
 * words). At most 30 entries are rendered. */
export function renderWordCloud(entries: WordCloudEntry[]): string {
  const shown = entries.slice(0, CLOUD_LIMIT);
  if (shown.length === 0) {
    return '<div class="cloud cloud-empty">no topic words</div>';
  }
  const maxWeight = Math.max(...shown.map((e) => e.weight), 1e-12);
  const spans = shown.map((e) => {
    const px = MIN_FONT_PX + (MAX_FONT_PX - MIN_FONT_PX) * (e.weight / maxWeight);
    return (
      `<span class="cloud-word" data-word="${escapeHtml(e.word)}" ` +
      `data-label="${escapeHtml(e.label)}" ` +
      `style="font-size:${px.toFixed(1)}px;color:${sentimentColor(e.label)}" ` +
      `title="${escapeHtml(`${e.word}: ${e.label}, weight ${e.weight}`)}">` +
      `${escapeHtml(e.word)}</span>`
    );
  });
  return `<div class="cloud">${spans.join(" ")}</div>`;
}

/** The topic "glimpse" panel: sentiment headline, phrase labels,
 * representative sentences (yellow-highlighted while the topic is emerging)
 * and the word cloud. */
export function renderGlimpse(topic: TopicDoc, version: string): string {
  const phraseChips = topic.phrase_labels
    .map(
      (p) =>
        `<span class="phrase-chip" title="count ${p.count}">${escapeHtml(p.text)}</span>`,
    )
    .join(" ");
  const sentenceStyle = topic.highlight_sentences
    ? ` style="background-color:${EMERGING_HIGHLIGHT}"`
    : "";
  const sentences = topic.sentences
    .map(
      (s) =>
        `<li class="glimpse-sentence${topic.highlight_sentences ? " emerging" : ""}"${sentenceStyle}>` +
        `${escapeHtml(s)}</li>`,
    )
    .join("");
  const badge = topic.emerging
    ? '<span class="emerging-badge">EMERGING</span>'
    : "";
  return [
    `<section class="glimpse" data-version="${escapeHtml(version)}" data-topic="${topic.topic_id}">`,
    `<header class="glimpse-header">`,
    `<h3>Topic ${topic.topic_id} ${badge}</h3>`,
    `<span class="glimpse-sentiment" style="color:${sentimentColor(topic.sentiment_label)}">` +
      `${escapeHtml(topic.sentiment_label)}</span>`,
    `</header>`,
    `<div class="glimpse-phrases">${phraseChips || "<em>no phrase labels</em>"}</div>`,
    `<ul class="glimpse-sentences">${sentences || "<li><em>no sentences</em></li>"}</ul>`,
    renderWordCloud(topic.word_cloud),
    `</section>`,
  ].join("\n");
}
