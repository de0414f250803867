// Typed client for the game service. All game logic lives server-side;
// this module only moves JSON across the wire.

export type Pair = [number, number];

export interface BoardSummary {
  m: number;
  n: number;
  positions_total: number;
  members: number;
  start: number[];
  start_grundy: number;
}

export interface ViaBox {
  box: Pair;
  first_lr: Pair;
  second_box?: Pair;
  second_lr?: Pair;
}

export interface OptionRecord {
  to: number[];
  op: "MHR1" | "MHR2";
  grundy: number;
  via_boxes: ViaBox[];
}

export interface PositionRecord {
  m: number;
  n: number;
  lambda: number[];
  index_set: number[];
  dual: number[];
  member: boolean;
  grundy?: number;
  outcome?: "P" | "N";
  options?: OptionRecord[];
}

export interface MoveRecord {
  from: number[];
  box: Pair;
  first_lr: Pair;
  op: "MHR1" | "MHR2";
  second_box?: Pair;
  second_lr?: Pair;
  to: number[];
}

export class ApiError extends Error {
  status: number;

  constructor(status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
    this.status = status;
  }
}

export function lambdaText(parts: number[]): string {
  return parts.join(",");
}

async function throwApiError(response: Response): Promise<never> {
  let detail = response.statusText || `HTTP ${response.status}`;
  try {
    const body = await response.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body, keep the status text
  }
  throw new ApiError(response.status, detail);
}

export interface Api {
  board(m: number, n: number): Promise<BoardSummary>;
  position(m: number, n: number, parts: number[]): Promise<PositionRecord>;
  move(m: number, n: number, from: number[], box: Pair): Promise<MoveRecord>;
}

export class ApiClient implements Api {
  baseUrl: string;

  constructor(baseUrl = "") {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await fetch(`${this.baseUrl}/api/v1${path}`);
    if (!response.ok) await throwApiError(response);
    return response.json() as Promise<T>;
  }

  board(m: number, n: number): Promise<BoardSummary> {
    return this.getJson(`/board/${m}/${n}`);
  }

  position(m: number, n: number, parts: number[]): Promise<PositionRecord> {
    return this.getJson(`/board/${m}/${n}/position/${lambdaText(parts)}`);
  }

  async move(m: number, n: number, from: number[], box: Pair): Promise<MoveRecord> {
    const response = await fetch(`${this.baseUrl}/api/v1/board/${m}/${n}/move`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ from, box }),
    });
    if (!response.ok) await throwApiError(response);
    return response.json() as Promise<MoveRecord>;
  }
}
