/** Browser bootstrap: owns the state, forwards clicks to the API client,
 * refreshes after every move (turn-based, so no push channel needed). */

import { ApiClient, ApiError } from "./api.js";
import { parseMatroidText } from "./matroids.js";
import { render } from "./render.js";
import { initialState, type ViewState } from "./state.js";

const SERVER = (window as unknown as { MATROIDCOLOR_SERVER?: string }).MATROIDCOLOR_SERVER
  ?? "http://127.0.0.1:8000";

const api = new ApiClient(SERVER);
let state: ViewState = initialState();
const root = document.getElementById("app")!;

function draw(): void {
  root.innerHTML = render(state);
}

function showApiError(error: unknown): void {
  if (error instanceof ApiError && error.status === 409) {
    state = { ...state, toast: "not your turn" };
  } else if (error instanceof ApiError) {
    state = { ...state, toast: error.message };
  } else {
    state = { ...state, toast: `server unreachable: ${String(error)}` };
  }
  draw();
}

async function refresh(): Promise<void> {
  if (!state.gameId) return;
  state = { ...state, view: await api.getGame(state.gameId), toast: null };
  draw();
}

async function startGame(): Promise<void> {
  const text = (document.getElementById("matroid-text") as HTMLTextAreaElement).value;
  const colors = Number((document.getElementById("color-count") as HTMLInputElement).value);
  const mode = (document.getElementById("mode-select") as HTMLSelectElement).value as
    | "classic"
    | "modified";
  let spec;
  try {
    spec = parseMatroidText(text);
  } catch (error) {
    state = { ...state, matroidText: text, formError: String((error as Error).message) };
    draw();
    return;
  }
  try {
    const gameId = await api.createGame(text, colors, mode);
    state = { ...state, matroidText: text, colors, mode, spec, gameId, formError: null };
    await refresh();
  } catch (error) {
    const message = error instanceof ApiError ? error.message : String(error);
    state = { ...state, matroidText: text, colors, mode, formError: message };
    draw();
  }
}

async function act(move: () => Promise<unknown>): Promise<void> {
  try {
    await move();
    await refresh();
  } catch (error) {
    showApiError(error);
  }
}

root.addEventListener("click", (event) => {
  const target = (event.target as HTMLElement).closest("[data-action]");
  if (!(target instanceof HTMLElement)) return;
  const id = state.gameId;
  switch (target.dataset.action) {
    case "start":
      void startGame();
      break;
    case "color":
      if (id) void act(() => api.submitColor(id, Number(target.dataset.color)));
      break;
    case "indicate":
      if (id) void act(() => api.submitIndication(id, Number(target.dataset.element)));
      break;
    case "kind":
      if (id) void act(() => api.submitKind(id, Number(target.dataset.kind) as 1 | 2));
      break;
    case "reset":
      state = { ...initialState(), matroidText: state.matroidText, colors: state.colors, mode: state.mode };
      draw();
      break;
  }
});

draw();
