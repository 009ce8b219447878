/** Thin typed client for the play server. */

import type { ApiErrorBody, GameView, Mode } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(body.error ?? `request failed with status ${status}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      throw new ApiError(response.status, body as ApiErrorBody);
    }
    return body as T;
  }

  async createGame(matroid: string, colors: number, mode: Mode): Promise<string> {
    const created = await this.request<{ id: string }>("/games", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ matroid, colors, mode, human_role: "bob" }),
    });
    return created.id;
  }

  getGame(id: string): Promise<GameView> {
    return this.request<GameView>(`/games/${id}`);
  }

  private move(id: string, body: Record<string, number>): Promise<GameView> {
    return this.request<GameView>(`/games/${id}/move`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  submitColor(id: string, color: number): Promise<GameView> {
    return this.move(id, { color });
  }

  submitIndication(id: string, element: number): Promise<GameView> {
    return this.move(id, { element });
  }

  submitKind(id: string, kind: 1 | 2): Promise<GameView> {
    return this.move(id, { kind });
  }
}
