import { describe, expect, it } from "vitest";

import { ApiClient, ApiRequestError, LatestWins } from "../src/api";

function fakeFetch(routes: Record<string, { status: number; body: unknown }>) {
  const calls: string[] = [];
  const fetchFn = async (url: string) => {
    calls.push(url);
    const route = routes[url];
    if (!route) throw new Error(`unrouted: ${url}`);
    return {
      ok: route.status < 400,
      status: route.status,
      json: async () => route.body,
    };
  };
  return { fetchFn, calls };
}

describe("ApiClient", () => {
  it("returns parsed JSON on success", async () => {
    const { fetchFn } = fakeFetch({ "/base/health": { status: 200, body: { status: "ok" } } });
    const client = new ApiClient("/base", fetchFn);
    expect(await client.get("/health")).toEqual({ status: "ok" });
  });

  it("surfaces the API error body on failure", async () => {
    const { fetchFn } = fakeFetch({
      "/collocations?term=zzz": {
        status: 404,
        body: { error: "unknown term 'zzz'", suggestions: [] },
      },
    });
    const client = new ApiClient("", fetchFn);
    const failure = (await client.get("/collocations?term=zzz").catch((e) => e)) as ApiRequestError;
    expect(failure).toBeInstanceOf(ApiRequestError);
    expect(failure.status).toBe(404);
    expect(failure.body?.suggestions).toEqual([]);
  });
});

describe("LatestWins", () => {
  it("discards a response that was superseded by a newer request", async () => {
    const latest = new LatestWins();
    let releaseFirst!: () => void;
    const first = latest.run(
      () =>
        new Promise<string>((resolve) => {
          releaseFirst = () => resolve("stale");
        }),
    );
    const second = latest.run(async () => "fresh");
    releaseFirst();
    expect(await second).toBe("fresh");
    expect(await first).toBeUndefined();
  });

  it("keeps the newest response", async () => {
    const latest = new LatestWins();
    expect(await latest.run(async () => 1)).toBe(1);
    expect(await latest.run(async () => 2)).toBe(2);
  });

  it("cancel() invalidates in-flight work", async () => {
    const latest = new LatestWins();
    const pending = latest.run(async () => "late");
    latest.cancel();
    expect(await pending).toBeUndefined();
  });
});
