/** Thin fetch wrapper plus latest-wins request sequencing.
 *
 * The UI fires a request per state change; when a newer state supersedes
 * an in-flight request, the stale response is discarded rather than
 * rendered (single-threaded event loop, latest-wins).
 */

import type { ApiError } from "./types";

export class ApiRequestError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly body: ApiError | null,
  ) {
    super(message);
  }
}

export type FetchLike = (url: string) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  async get<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.base + path);
    if (!response.ok) {
      let body: ApiError | null = null;
      try {
        body = (await response.json()) as ApiError;
      } catch {
        body = null;
      }
      throw new ApiRequestError(body?.error ?? `request failed (${response.status})`, response.status, body);
    }
    return (await response.json()) as T;
  }
}

/** Resolves to undefined when a newer run() superseded this one. */
export class LatestWins {
  private ticket = 0;

  async run<T>(task: () => Promise<T>): Promise<T | undefined> {
    const mine = ++this.ticket;
    const result = await task();
    return mine === this.ticket ? result : undefined;
  }

  /** Invalidate in-flight work without starting new work. */
  cancel(): void {
    this.ticket++;
  }
}
