/** Debounced, latest-wins request scheduling.
 *
 * Control changes arrive in bursts (sliders, keystrokes). The scheduler
 * fires at most one request per debounce window and discards any response
 * that is not from the most recently started request, so the screen can
 * never show a stale result.
 */

export interface SchedulerOptions {
  /** debounce window in milliseconds */
  delayMs?: number;
  setTimeoutImpl?: typeof setTimeout;
  clearTimeoutImpl?: typeof clearTimeout;
}

export class RequestScheduler<TArgs, TResult> {
  private readonly delayMs: number;
  private readonly setT: typeof setTimeout;
  private readonly clearT: typeof clearTimeout;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private seq = 0;
  /** number of requests actually started (visible for tests/diagnostics) */
  requestsStarted = 0;

  constructor(
    private readonly run: (args: TArgs) => Promise<TResult>,
    private readonly onResult: (result: TResult, args: TArgs) => void,
    private readonly onError: (error: unknown, args: TArgs) => void = () => {},
    options: SchedulerOptions = {},
  ) {
    this.delayMs = options.delayMs ?? 150;
    this.setT = options.setTimeoutImpl ?? setTimeout;
    this.clearT = options.clearTimeoutImpl ?? clearTimeout;
  }

  /** Schedule a request, replacing any not-yet-fired one. */
  schedule(args: TArgs): void {
    if (this.timer !== null) {
      this.clearT(this.timer);
    }
    this.timer = this.setT(() => {
      this.timer = null;
      this.start(args);
    }, this.delayMs);
  }

  /** Fire immediately (initial load); still participates in latest-wins. */
  fireNow(args: TArgs): void {
    if (this.timer !== null) {
      this.clearT(this.timer);
      this.timer = null;
    }
    this.start(args);
  }

  private start(args: TArgs): void {
    const id = ++this.seq;
    this.requestsStarted += 1;
    this.run(args).then(
      (result) => {
        if (id === this.seq) this.onResult(result, args);
      },
      (error) => {
        if (id === this.seq) this.onError(error, args);
      },
    );
  }
}
