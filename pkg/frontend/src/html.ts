/** Tiny string-template helpers; render functions return markup strings so
 * they stay testable without a browser. */

export function escapeHtml(raw: string): string {
  return raw
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

export function escapeAttr(raw: string): string {
  return escapeHtml(raw);
}
