/**
 * Debounced, superseding request scheduler for slider-driven what-ifs.
 *
 * Guarantees, in order of importance:
 *  - the UI state shown always corresponds to the *latest* parameters:
 *    a response is dropped if a newer request has been issued since;
 *  - slider drags coalesce into one request per quiet period (the
 *    endpoint is cheap, but request storms help nobody);
 *  - in-flight requests are aborted when superseded.
 */

export interface ScheduledFetch<Req, Resp> {
  (request: Req, signal: AbortSignal): Promise<Resp>;
}

export interface SchedulerCallbacks<Resp> {
  onResult: (response: Resp) => void;
  onError: (error: unknown) => void;
}

export const DEFAULT_DEBOUNCE_MS = 75; // within the 50-100 ms comfort band

export class RequestScheduler<Req, Resp> {
  private sequence = 0;
  private applied = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;

  constructor(
    private readonly send: ScheduledFetch<Req, Resp>,
    private readonly callbacks: SchedulerCallbacks<Resp>,
    private readonly debounceMs: number = DEFAULT_DEBOUNCE_MS,
  ) {}

  /** Schedule a request for the given parameters, superseding anything older. */
  request(parameters: Req): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      this.fire(parameters);
    }, this.debounceMs);
  }

  /** Issue immediately (fixture loads, initial render). Still supersedes. */
  fire(parameters: Req): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.inflight !== null) {
      this.inflight.abort();
    }
    const controller = new AbortController();
    this.inflight = controller;
    const ticket = ++this.sequence;
    this.send(parameters, controller.signal).then(
      (response) => {
        if (ticket <= this.applied || ticket !== this.sequence) {
          return; // a newer request took over; never present a stale frame
        }
        this.applied = ticket;
        this.inflight = null;
        this.callbacks.onResult(response);
      },
      (error) => {
        if (ticket !== this.sequence) {
          return; // abort of a superseded request is expected noise
        }
        this.inflight = null;
        this.callbacks.onError(error);
      },
    );
  }

  get pending(): boolean {
    return this.timer !== null || this.inflight !== null;
  }
}
