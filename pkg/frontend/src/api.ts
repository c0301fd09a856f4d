import type {
  ApiErrorBody,
  CreateSessionRequest,
  PresetEntry,
  SessionResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly field: string | null;
  readonly status: number;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.field = body.field ?? null;
    this.status = status;
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let body: ApiErrorBody;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    body = { code: "http-error", message: `HTTP ${response.status}` };
  }
  throw new ApiError(response.status, body);
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  async listPresets(): Promise<PresetEntry[]> {
    const data = await unwrap<{ presets: PresetEntry[] }>(await fetch(this.url("/presets")));
    return data.presets;
  }

  async createSession(request: CreateSessionRequest): Promise<SessionResponse & { id: string }> {
    const response = await fetch(this.url("/sessions"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    return unwrap(response);
  }

  async getStage(sessionId: string, stage: number): Promise<SessionResponse> {
    return unwrap(await fetch(this.url(`/sessions/${sessionId}/stages/${stage}`)));
  }

  async step(sessionId: string, direction: "forward" | "back"): Promise<SessionResponse> {
    const response = await fetch(this.url(`/sessions/${sessionId}/step`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ direction }),
    });
    return unwrap(response);
  }

  async reset(sessionId: string): Promise<SessionResponse> {
    return unwrap(await fetch(this.url(`/sessions/${sessionId}/reset`), { method: "POST" }));
  }
}
