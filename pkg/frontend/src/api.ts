import type {
  ProjectConfig,
  ProjectStatus,
  ReviewFilters,
  ReviewsResponse,
  RiverResponse,
  TopicResponse,
  WordCloudEntry,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
    public report?: string[],
  ) {
    super(message);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    const err = body?.error ?? {};
    throw new ApiError(err.code ?? "HTTP_ERROR", err.message ?? response.statusText, err.report);
  }
  return body as T;
}

/** Thin fetch client over the HTTP API; all analytics stay server-side. */
export class ApiClient {
  constructor(
    private base: string = "",
    private fetcher: typeof fetch = fetch,
  ) {}

  private url(path: string, params?: Record<string, string | number | null | undefined>): string {
    const query = params
      ? Object.entries(params)
          .filter(([, v]) => v !== null && v !== undefined && v !== "")
          .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(String(v))}`)
          .join("&")
      : "";
    return this.base + path + (query ? `?${query}` : "");
  }

  private get<T>(path: string, params?: Record<string, string | number | null | undefined>, signal?: AbortSignal): Promise<T> {
    return this.fetcher(this.url(path, params), { signal }).then((r) => asJson<T>(r));
  }

  createProject(name: string): Promise<{ project_id: string }> {
    return this.fetcher(this.url("/projects"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ name }),
    }).then((r) => asJson(r));
  }

  uploadFile(projectId: string, kind: string, content: string): Promise<unknown> {
    return this.fetcher(this.url(`/projects/${projectId}/files/${kind}`), {
      method: "POST",
      body: content,
    }).then((r) => asJson(r));
  }

  getStatus(projectId: string, signal?: AbortSignal): Promise<ProjectStatus> {
    return this.get(`/projects/${projectId}`, undefined, signal);
  }

  putConfig(projectId: string, config: Partial<ProjectConfig>): Promise<unknown> {
    return this.fetcher(this.url(`/projects/${projectId}/config`), {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(config),
    }).then((r) => asJson(r));
  }

  putSeeds(projectId: string, additions: [string, string][]): Promise<{ stale: boolean }> {
    return this.fetcher(this.url(`/projects/${projectId}/seeds`), {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ additions }),
    }).then((r) => asJson(r));
  }

  run(projectId: string): Promise<{ status: string }> {
    return this.fetcher(this.url(`/projects/${projectId}/run`), { method: "POST" }).then((r) =>
      asJson(r),
    );
  }

  getRiver(projectId: string, signal?: AbortSignal): Promise<RiverResponse> {
    return this.get(`/projects/${projectId}/river`, undefined, signal);
  }

  getTopic(projectId: string, versionIndex: number, topicId: number, signal?: AbortSignal): Promise<TopicResponse> {
    return this.get(`/projects/${projectId}/topics/${versionIndex}/${topicId}`, undefined, signal);
  }

  getWordcloud(projectId: string, versionIndex: number, topicId: number, signal?: AbortSignal): Promise<{ entries: WordCloudEntry[] }> {
    return this.get(`/projects/${projectId}/wordcloud/${versionIndex}/${topicId}`, undefined, signal);
  }

  getReviews(
    projectId: string,
    versionIndex: number,
    topicId: number,
    filters: ReviewFilters,
    thresholdOverride: number | null,
    offset = 0,
    limit = 50,
    signal?: AbortSignal,
  ): Promise<ReviewsResponse> {
    return this.get(
      `/projects/${projectId}/reviews`,
      {
        version_index: versionIndex,
        topic_id: topicId,
        threshold: thresholdOverride,
        text: filters.text,
        min_rating: filters.minRating,
        date_from: filters.dateFrom,
        date_to: filters.dateTo,
        offset,
        limit,
      },
      signal,
    );
  }
}
