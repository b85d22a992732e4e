import { escapeHtml } from "../html.js";
import { sentimentColor } from "../palette.js";
import type { ReviewRow, ReviewsResponse } from "../types.js";

/** Review text with server-sent highlight spans wrapped in colored marks.
 * Spans are non-overlapping and ordered; the color for a word is the same
 * palette entry the cloud uses for that word's label. */
export function renderHighlightedText(row: ReviewRow): string {
  const text = row.text;
  let cursor = 0;
  const parts: string[] = [];
  for (const h of row.highlights) {
    if (h.start > cursor) {
      parts.push(escapeHtml(text.slice(cursor, h.start)));
    }
    parts.push(
      `<mark class="topic-word" data-word="${escapeHtml(h.word)}" ` +
        `data-label="${escapeHtml(h.label)}" ` +
        `style="background-color:${sentimentColor(h.label)}">` +
        `${escapeHtml(text.slice(h.start, h.end))}</mark>`,
    );
    cursor = h.end;
  }
  parts.push(escapeHtml(text.slice(cursor)));
  return parts.join("");
}

/** The prioritized review table. Rows arrive sorted by relevance from the
 * server and are rendered in that order, never re-sorted client-side. */
export function renderReviewTable(listing: ReviewsResponse): string {
  const rows = listing.reviews
    .map(
      (r) =>
        `<tr data-review-id="${r.review_id}">` +
        `<td class="col-text">${renderHighlightedText(r)}</td>` +
        `<td class="col-rating">${r.rating}</td>` +
        `<td class="col-date">${escapeHtml(r.post_date)}</td>` +
        `<td class="col-version">${escapeHtml(r.version)}</td>` +
        `<td class="col-relevance">${r.relevance.toFixed(3)}</td>` +
        `</tr>`,
    )
    .join("\n");
  return [
    `<table class="review-table" data-total="${listing.total}" data-threshold="${listing.threshold}">`,
    `<thead><tr><th>review</th><th>rating</th><th>date</th><th>version</th><th>relevance</th></tr></thead>`,
    `<tbody>${rows || '<tr><td colspan="5"><em>no reviews above threshold</em></td></tr>'}</tbody>`,
    `</table>`,
  ].join("\n");
}

/** Search bar + rating/date filters + threshold slider. Changing any control
 * re-queries the server; the UI filters nothing itself. */
export function renderFilterControls(
  filters: { text: string | null; minRating: number | null; dateFrom: string | null; dateTo: string | null },
  threshold: number,
): string {
  return [
    `<form class="review-filters">`,
    `<input name="text" type="search" placeholder="search text" value="${escapeHtml(filters.text ?? "")}">`,
    `<input name="min_rating" type="number" min="1" max="5" step="0.5" placeholder="min rating" value="${filters.minRating ?? ""}">`,
    `<input name="date_from" type="date" value="${filters.dateFrom ?? ""}">`,
    `<input name="date_to" type="date" value="${filters.dateTo ?? ""}">`,
    `<label>threshold <input name="threshold" type="range" min="0" max="1" step="0.01" value="${threshold}"></label>`,
    `</form>`,
  ].join("\n");
}
