/** Typed client for the characterization service. */

export interface MotifJson {
  iv: number;
  ilp: number;
  ihp: number;
  ihi: number[];
  sig: 0 | 1;
}

export interface OverlayJson {
  pit: [number, number];
  lowerPeak: [number, number];
  higherPeak: [number, number];
  intersections: [number, number][];
  waterPolygons: [number, number][][];
  sig: 0 | 1;
}

export interface HistogramJson {
  edges: number[];
  counts: number[];
}

export interface CharacterizeResponse {
  /** scalar result; null when the evaluation is degenerate (NaN) */
  value: number | HistogramJson | null;
  warnings: string[];
  motifs: MotifJson[];
  meta: {
    Fsig: string;
    NIsig: number | null;
    AT: string;
    Astats: string;
    vstats: number | null;
    attr: (number | null)[];
    PT: string;
    TH: number | null;
  };
  overlays: OverlayJson[];
}

export interface ExampleProfile {
  name: string;
  description: string;
  dx: number;
  n: number;
  z: number[];
}

export interface ApiError {
  status: number;
  /** FC field name when the server rejected the spec */
  field: string | null;
  message: string;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  async characterize(z: number[], dx: number, spec: string): Promise<CharacterizeResponse> {
    const res = await this.fetchImpl(`${this.base}/api/characterize`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ z, dx, spec }),
    });
    if (!res.ok) {
      throw await toApiError(res);
    }
    return (await res.json()) as CharacterizeResponse;
  }

  async examples(): Promise<ExampleProfile[]> {
    const res = await this.fetchImpl(`${this.base}/api/examples`);
    if (!res.ok) {
      throw await toApiError(res);
    }
    return (await res.json()) as ExampleProfile[];
  }
}

async function toApiError(res: Response): Promise<ApiError> {
  let field: string | null = null;
  let message = `request failed with status ${res.status}`;
  try {
    const body = await res.json();
    const detail = body?.detail;
    if (typeof detail === "string") {
      message = detail;
    } else if (detail && typeof detail === "object") {
      field = typeof detail.field === "string" ? detail.field : null;
      message = typeof detail.message === "string" ? detail.message : message;
    }
  } catch {
    // non-JSON error body: keep the status message
  }
  return { status: res.status, field, message };
}
