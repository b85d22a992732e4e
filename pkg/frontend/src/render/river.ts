import { escapeHtml } from "../html.js";
import { branchColor } from "../palette.js";
import type { RiverSlice } from "../types.js";

export interface RiverGeometry {
  width: number;
  height: number;
  padding: number;
}

const DEFAULT_GEOMETRY: RiverGeometry = { width: 760, height: 320, padding: 36 };

/** Stacked-stream issue river as an SVG string.
 *
 * One band ("river-branch") per topic across all version x-positions, plus a
 * clickable marker ("river-node") per (version, topic) carrying data
 * attributes for selection and a <title> tooltip with the hover text.
 * Widths come verbatim from the server; only pixel scaling happens here.
 * Zero widths render as hairlines so every branch stays visible.
 */
export function renderRiver(
  slices: RiverSlice[],
  hoverLabels?: (t: number, k: number) => string,
  geometry: RiverGeometry = DEFAULT_GEOMETRY,
): string {
  if (slices.length === 0) {
    return '<svg class="river river-empty" role="img"><text x="10" y="20">no snapshot loaded</text></svg>';
  }
  const K = slices[0].widths.length;
  const V = slices.length;
  const { width, height, padding } = geometry;
  const innerW = width - 2 * padding;
  const innerH = height - 2 * padding;
  const xOf = (t: number) => padding + (V === 1 ? innerW / 2 : (innerW * t) / (V - 1));

  const totals = slices.map((s) => s.widths.reduce((a, b) => a + b, 0));
  const maxTotal = Math.max(...totals, 1e-9);
  const yScale = innerH / maxTotal;

  // per version: stack widths and center the stream vertically
  const tops: number[][] = [];
  const bottoms: number[][] = [];
  for (let t = 0; t < V; t++) {
    const mid = padding + innerH / 2;
    let cursor = mid - (totals[t] * yScale) / 2;
    const top: number[] = [];
    const bottom: number[] = [];
    for (let k = 0; k < K; k++) {
      top.push(cursor);
      cursor += slices[t].widths[k] * yScale;
      bottom.push(cursor);
    }
    tops.push(top);
    bottoms.push(bottom);
  }

  const parts: string[] = [
    `<svg class="river" viewBox="0 0 ${width} ${height}" role="img" aria-label="issue river">`,
  ];
  for (let k = 0; k < K; k++) {
    const forward = slices.map((_, t) => `${xOf(t).toFixed(1)},${tops[t][k].toFixed(1)}`);
    const back = slices
      .map((_, t) => `${xOf(t).toFixed(1)},${bottoms[t][k].toFixed(1)}`)
      .reverse();
    parts.push(
      `<polygon class="river-branch" data-topic="${k}" fill="${branchColor(k)}" ` +
        `fill-opacity="0.8" stroke="${branchColor(k)}" stroke-width="1" ` +
        `points="${forward.join(" ")} ${back.join(" ")}"></polygon>`,
    );
  }
  for (let t = 0; t < V; t++) {
    for (let k = 0; k < K; k++) {
      const cy = (tops[t][k] + bottoms[t][k]) / 2;
      const emerging = slices[t].emerging[k];
      const hover = hoverLabels ? hoverLabels(t, k) : "";
      parts.push(
        `<circle class="river-node${emerging ? " river-node-emerging" : ""}" ` +
          `data-version="${t}" data-topic="${k}" cx="${xOf(t).toFixed(1)}" ` +
          `cy="${cy.toFixed(1)}" r="${emerging ? 7 : 5}" fill="${branchColor(k)}" ` +
          `stroke="${emerging ? "#222" : "#fff"}" stroke-width="1.5">` +
          `<title>${escapeHtml(hover || `version ${slices[t].version} - topic ${k}`)}</title>` +
          `</circle>`,
      );
    }
  }
  for (let t = 0; t < V; t++) {
    parts.push(
      `<text class="river-axis" x="${xOf(t).toFixed(1)}" y="${height - 8}" ` +
        `text-anchor="middle" font-size="12">${escapeHtml(slices[t].version)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

/** Hover text for one river node: the topic's phrase labels at a version. */
export function riverHoverText(version: string, topicId: number, labels: string[]): string {
  const joined = labels.length ? labels.join(", ") : "no phrase labels";
  return `v${version} topic ${topicId}: ${joined}`;
}
