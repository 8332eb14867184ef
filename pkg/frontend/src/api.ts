import type {
  EvalResponse,
  GameState,
  MoveResponse,
  SessionResponse,
  Square,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

async function check(res: Response): Promise<any> {
  if (!res.ok) {
    let detail = res.statusText;
    try {
      detail = (await res.json()).detail ?? detail;
    } catch {
      // non-JSON error body
    }
    throw new ApiError(res.status, detail);
  }
  return res.json();
}

export class ApiClient {
  constructor(private base: string = "") {}

  async evalPosition(x: number, y: number, pass: boolean): Promise<EvalResponse> {
    const res = await fetch(
      `${this.base}/api/eval?x=${x}&y=${y}&pass=${pass}`,
    );
    return check(res);
  }

  async pPositions(n: number, layer: "classic" | "pass"): Promise<GameState[]> {
    const res = await fetch(`${this.base}/api/ppositions?n=${n}&layer=${layer}`);
    return check(res);
  }

  async createSession(
    x: number,
    y: number,
    enginePlays: "first" | "second",
    passAvailable = true,
  ): Promise<SessionResponse> {
    const res = await fetch(`${this.base}/api/session`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        x,
        y,
        engine_plays: enginePlays,
        pass_available: passAvailable,
      }),
    });
    return check(res);
  }

  async move(
    sessionId: string,
    kind: string,
    target?: Square,
  ): Promise<MoveResponse> {
    const body: Record<string, unknown> = { kind };
    if (target) {
      body.to_x = target.x;
      body.to_y = target.y;
    }
    const res = await fetch(`${this.base}/api/session/${sessionId}/move`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return check(res);
  }

  async config(): Promise<{ window: number }> {
    const res = await fetch(`${this.base}/api/config`);
    return check(res);
  }
}
