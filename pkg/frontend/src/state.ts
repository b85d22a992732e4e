import type { ReviewFilters, RiverResponse } from "./types.js";

export interface ViewState {
  projectId: string | null;
  versionIndex: number | null;
  topicId: number | null;
  filters: ReviewFilters;
  thresholdOverride: number | null;
}

export const EMPTY_FILTERS: ReviewFilters = {
  text: null,
  minRating: null,
  dateFrom: null,
  dateTo: null,
};

/** Single-user view state.
 *
 * Every selection change bumps a sequence number and aborts the previous
 * in-flight request; a response is applied only while its sequence is still
 * current, so concurrent requests resolve last-write-wins.
 */
export class ViewStore {
  state: ViewState = {
    projectId: null,
    versionIndex: null,
    topicId: null,
    filters: { ...EMPTY_FILTERS },
    thresholdOverride: null,
  };

  private seq = 0;
  private controller: AbortController | null = null;

  /** Start a new request generation: cancel the old one, hand out a ticket. */
  begin(): { seq: number; signal: AbortSignal } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.seq += 1;
    return { seq: this.seq, signal: this.controller.signal };
  }

  isCurrent(seq: number): boolean {
    return seq === this.seq;
  }

  selectProject(projectId: string): void {
    this.state = {
      projectId,
      versionIndex: null,
      topicId: null,
      filters: { ...EMPTY_FILTERS },
      thresholdOverride: null,
    };
  }

  selectTopic(versionIndex: number, topicId: number): void {
    this.state = { ...this.state, versionIndex, topicId };
  }

  setFilters(filters: Partial<ReviewFilters>): void {
    this.state = { ...this.state, filters: { ...this.state.filters, ...filters } };
  }

  setThresholdOverride(value: number | null): void {
    this.state = { ...this.state, thresholdOverride: value };
  }

  /** Selected indices must always reference entities present in the loaded
   * snapshot; clamp after every snapshot (re)load. */
  clampToSnapshot(river: RiverResponse): void {
    const versions = river.river.length;
    if (versions === 0) {
      this.state = { ...this.state, versionIndex: null, topicId: null };
      return;
    }
    let { versionIndex, topicId } = this.state;
    if (versionIndex === null || versionIndex >= versions) {
      versionIndex = versionIndex === null ? null : versions - 1;
    }
    const k = versionIndex === null ? 0 : river.river[versionIndex].widths.length;
    if (topicId !== null && (versionIndex === null || topicId >= k)) {
      topicId = versionIndex === null ? null : Math.max(0, k - 1);
    }
    this.state = { ...this.state, versionIndex, topicId };
  }
}
