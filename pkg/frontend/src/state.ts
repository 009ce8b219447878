/** View-model: everything the renderer needs, plus the rules for which
 * controls are live.  Keeping these pure makes the no-illegal-clicks
 * invariant directly testable. */

import { groundSize, isProperColoring, type MatroidSpec } from "./matroids.js";
import type { GameView, Mode } from "./types.js";

export interface ViewState {
  gameId: string | null;
  matroidText: string;
  spec: MatroidSpec | null;
  colors: number;
  mode: Mode;
  view: GameView | null;
  formError: string | null;
  toast: string | null;
}

export function initialState(): ViewState {
  return {
    gameId: null,
    matroidText: "",
    spec: null,
    colors: 2,
    mode: "classic",
    view: null,
    formError: null,
    toast: null,
  };
}

/** The palette is exactly the server's legal colors for the indicated
 * element; anything else is simply not rendered as clickable. */
export function paletteColors(state: ViewState): number[] {
  if (!state.view || state.view.awaiting !== "human_color") return [];
  return state.view.legal_colors;
}

export function canPickColor(state: ViewState, color: number): boolean {
  return paletteColors(state).includes(color);
}

export function indicatableElements(state: ViewState): number[] {
  if (!state.view || state.view.awaiting !== "human_indication") return [];
  return state.view.uncolored;
}

export function canPickKind(state: ViewState): boolean {
  return state.view !== null && state.view.awaiting === "human_kind";
}

export function elements(state: ViewState): number[] {
  if (state.spec) {
    return Array.from({ length: groundSize(state.spec) }, (_, i) => i);
  }
  return [];
}

export function colorOf(state: ViewState, element: number): number | null {
  const color = state.view?.coloring[String(element)];
  return color === undefined ? null : color;
}

export function finished(state: ViewState): boolean {
  return state.view?.awaiting === "finished";
}

/** Client-side audit of the final position: the displayed classes must be
 * a proper coloring, and a full coloring exactly when Alice won. */
export function verifyOutcome(state: ViewState): "verified" | "mismatch" | null {
  if (!state.view || !state.spec || !finished(state)) return null;
  const proper = isProperColoring(state.spec, state.view.coloring);
  const complete = state.view.uncolored.length === 0;
  const consistent = proper && complete === (state.view.winner === "alice");
  return consistent ? "verified" : "mismatch";
}
