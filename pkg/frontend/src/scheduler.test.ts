import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { RequestScheduler } from "./scheduler.js";

describe("RequestScheduler", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  function make(run: (n: number) => Promise<string>) {
    const results: string[] = [];
    const errors: unknown[] = [];
    const sched = new RequestScheduler<number, string>(
      run,
      (r) => results.push(r),
      (e) => errors.push(e),
    );
    return { sched, results, errors };
  }

  it("debounces a burst into a single request", async () => {
    const run = vi.fn(async (n: number) => `r${n}`);
    const { sched, results } = make(run);
    for (let i = 0; i < 20; i++) {
      sched.schedule(i);
      vi.advanceTimersByTime(10);
    }
    await vi.runAllTimersAsync();
    expect(run).toHaveBeenCalledTimes(1);
    expect(run).toHaveBeenCalledWith(19);
    expect(results).toEqual(["r19"]);
  });

  it("fires at most ~7 requests during a 1 s keystroke burst", async () => {
    const run = vi.fn(async (n: number) => `r${n}`);
    const { sched } = make(run);
    // a keystroke every 160 ms for one second: each one's 150 ms window
    // elapses before the next keystroke
    for (let t = 0; t < 1000; t += 160) {
      sched.schedule(t);
      vi.advanceTimersByTime(160);
    }
    await vi.runAllTimersAsync();
    expect(run.mock.calls.length).toBeLessThanOrEqual(7);
    expect(sched.requestsStarted).toBe(run.mock.calls.length);
  });

  it("delivers only the latest response when requests overlap (latest wins)", async () => {
    const resolvers: Array<(v: string) => void> = [];
    const run = vi.fn((n: number) =>
      new Promise<string>((resolve) => { resolvers.push((v) => resolve(`${v}${n}`)); }));
    const { sched, results } = make(run);

    sched.fireNow(1);
    sched.fireNow(2);
    expect(run).toHaveBeenCalledTimes(2);

    // the older request resolves last — its result must be discarded
    resolvers[1]("r");
    resolvers[0]("r");
    await vi.runAllTimersAsync();
    expect(results).toEqual(["r2"]);
  });

  it("discards errors from superseded requests", async () => {
    const resolvers: Array<{ ok: (v: string) => void; fail: (e: Error) => void }> = [];
    const run = vi.fn((_: number) =>
      new Promise<string>((resolve, reject) =>
        resolvers.push({ ok: resolve, fail: reject })));
    const { sched, results, errors } = make(run);

    sched.fireNow(1);
    sched.fireNow(2);
    resolvers[0].fail(new Error("stale failure"));
    resolvers[1].ok("fresh");
    await vi.runAllTimersAsync();
    expect(errors).toEqual([]);
    expect(results).toEqual(["fresh"]);
  });

  it("reports errors from the latest request", async () => {
    const run = vi.fn(async (_: number) => { throw new Error("boom"); });
    const { sched, errors } = make(run);
    sched.fireNow(1);
    await vi.runAllTimersAsync();
    expect(errors).toHaveLength(1);
    expect((errors[0] as Error).message).toBe("boom");
  });

  it("fireNow cancels a pending debounced request", async () => {
    const run = vi.fn(async (n: number) => `r${n}`);
    const { sched, results } = make(run);
    sched.schedule(1);
    sched.fireNow(2);
    await vi.runAllTimersAsync();
    expect(run).toHaveBeenCalledTimes(1);
    expect(results).toEqual(["r2"]);
  });
});
