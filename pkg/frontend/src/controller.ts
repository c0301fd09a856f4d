import { ApiClient, ApiError } from "./api.js";
import type { CreateSessionRequest, SessionResponse, StageView } from "./types.js";

export interface ControllerHooks {
  renderStage(stage: number, view: StageView): void;
  showError(message: string | null): void;
  setBusy(busy: boolean): void;
}

// One active session, at most one in-flight API call; a failed call leaves
// the rendered view untouched and raises a non-blocking banner.
export class SessionController {
  sessionId: string | null = null;
  stage = 0;
  private pending = false;

  constructor(
    private readonly api: ApiClient,
    private readonly hooks: ControllerHooks,
  ) {}

  get busy(): boolean {
    return this.pending;
  }

  private async guarded<T extends SessionResponse>(call: () => Promise<T>): Promise<T | null> {
    if (this.pending) return null;
    this.pending = true;
    this.hooks.setBusy(true);
    try {
      const response = await call();
      this.stage = response.stage;
      this.hooks.showError(null);
      this.hooks.renderStage(response.stage, response.view);
      return response;
    } catch (error) {
      const message = error instanceof ApiError ? error.message : String(error);
      this.hooks.showError(message);
      return null;
    } finally {
      this.pending = false;
      this.hooks.setBusy(false);
    }
  }

  async create(request: CreateSessionRequest): Promise<boolean> {
    const response = await this.guarded(() => this.api.createSession(request));
    if (response && response.id) {
      this.sessionId = response.id;
      return true;
    }
    return false;
  }

  async step(direction: "forward" | "back"): Promise<void> {
    if (!this.sessionId) return;
    await this.guarded(() => this.api.step(this.sessionId as string, direction));
  }

  async reset(): Promise<void> {
    if (!this.sessionId) return;
    await this.guarded(() => this.api.reset(this.sessionId as string));
  }
}
