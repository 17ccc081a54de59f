import type { ArticleDoc, GraphDoc, IndexDoc, RecordDoc, StatsDoc, WeightClass } from "./types";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number | null = null,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** Thin typed client over the read-only JSON API. One in-flight request set
 *  per view: abort() cancels everything started since the last navigation. */
export class ApiClient {
  private controller: AbortController | null = null;

  constructor(readonly baseUrl: string = "") {}

  abort(): void {
    this.controller?.abort();
    this.controller = null;
  }

  private async get<T>(path: string): Promise<T> {
    if (!this.controller) this.controller = new AbortController();
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, { signal: this.controller.signal });
    } catch (error) {
      if ((error as DOMException).name === "AbortError") throw error;
      throw new ApiError(`réseau indisponible (${String(error)})`);
    }
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { error?: string };
        if (body.error) detail = body.error;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(detail, response.status);
    }
    return (await response.json()) as T;
  }

  index(): Promise<IndexDoc> {
    return this.get("/api/index");
  }

  graph(): Promise<GraphDoc> {
    return this.get("/api/graph");
  }

  ego(slug: string, depth: number, minClass: WeightClass): Promise<GraphDoc> {
    const params = new URLSearchParams({ depth: String(depth), min_class: minClass });
    return this.get(`/api/graph/ego/${slug}?${params}`);
  }

  record(slug: string): Promise<RecordDoc> {
    return this.get(`/api/concepts/${slug}`);
  }

  article(id: string): Promise<ArticleDoc> {
    return this.get(`/api/articles/${encodeURIComponent(id)}`);
  }

  stats(): Promise<StatsDoc> {
    return this.get("/api/stats");
  }
}
