/** Pure HTML rendering of the view state.  The page wires clicks through
 * data-action attributes; everything clickable here is legal to submit. */

import type { ViewState } from "./state.js";
import {
  canPickKind,
  colorOf,
  elements,
  finished,
  indicatableElements,
  paletteColors,
  verifyOutcome,
} from "./state.js";

const PALETTE = [
  "#e05c5c", "#5c7fe0", "#5cb85c", "#e0a85c", "#a05ce0",
  "#5cd0d0", "#d05ca8", "#8a8a5c",
];

export function colorSwatch(color: number): string {
  return PALETTE[(color - 1) % PALETTE.length]!;
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderStartForm(state: ViewState): string {
  const error = state.formError
    ? `<p class="error" role="alert">${escapeHtml(state.formError)}</p>`
    : "";
  return `
    <section class="start">
      <h2>New game</h2>
      <p>Paste a matroid file, pick a color count, and play Bob against the engine.</p>
      <textarea id="matroid-text" rows="9" placeholder="graphic 4 6\n0 2\n2 1\n0 3\n3 1\n0 1\n2 3">${escapeHtml(state.matroidText)}</textarea>
      <label>colors <input id="color-count" type="number" min="1" value="${state.colors}"></label>
      <label>mode
        <select id="mode-select">
          <option value="classic"${state.mode === "classic" ? " selected" : ""}>classic</option>
          <option value="modified"${state.mode === "modified" ? " selected" : ""}>modified</option>
        </select>
      </label>
      <button data-action="start">start game</button>
      ${error}
    </section>`;
}

function chip(state: ViewState, element: number): string {
  const color = colorOf(state, element);
  const indicated = state.view?.indicated === element;
  const clickable = indicatableElements(state).includes(element);
  const classes = ["chip"];
  if (indicated) classes.push("indicated");
  if (clickable) classes.push("clickable");
  const style = color === null ? "" : ` style="background:${colorSwatch(color)}"`;
  const action = clickable ? ` data-action="indicate" data-element="${element}"` : "";
  const label = color === null ? `${element}` : `${element}:${color}`;
  return `<button class="${classes.join(" ")}"${style}${action}${clickable ? "" : " disabled"}>${label}</button>`;
}

function graphicDiagram(state: ViewState): string {
  if (!state.spec || state.spec.family !== "graphic") return "";
  const { vertices, edges } = state.spec;
  const radius = 90;
  const cx = 110;
  const cy = 110;
  const position = (v: number): [number, number] => [
    cx + radius * Math.cos((2 * Math.PI * v) / Math.max(vertices, 1) - Math.PI / 2),
    cy + radius * Math.sin((2 * Math.PI * v) / Math.max(vertices, 1) - Math.PI / 2),
  ];
  const lines = edges
    .map((edge, index) => {
      const [u, v] = edge;
      const [x1, y1] = position(u);
      const [x2, y2] = position(v);
      const color = colorOf(state, index);
      const indicated = state.view?.indicated === index;
      const stroke = color === null ? (indicated ? "#222" : "#bbb") : colorSwatch(color);
      const width = indicated ? 5 : 3;
      const mx = (x1 + x2) / 2;
      const my = (y1 + y2) / 2;
      return `<line x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" y2="${y2.toFixed(1)}" stroke="${stroke}" stroke-width="${width}"/>` +
        `<text x="${mx.toFixed(1)}" y="${my.toFixed(1)}" class="edge-label">${index}</text>`;
    })
    .join("");
  const dots = Array.from({ length: vertices }, (_, v) => {
    const [x, y] = position(v);
    return `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="7" fill="#444"/>` +
      `<text x="${x.toFixed(1)}" y="${(y - 11).toFixed(1)}" class="vertex-label">${v}</text>`;
  }).join("");
  return `<svg viewBox="0 0 220 220" class="diagram" role="img" aria-label="graph">${lines}${dots}</svg>`;
}

function palette(state: ViewState): string {
  const legal = paletteColors(state);
  if (legal.length === 0) return "";
  const buttons = legal
    .map((c) =>
      `<button class="swatch" style="background:${colorSwatch(c)}" data-action="color" data-color="${c}">${c}</button>`)
    .join("");
  return `<div class="palette"><span>color element ${state.view?.indicated}:</span>${buttons}</div>`;
}

function kindChooser(state: ViewState): string {
  if (!canPickKind(state)) return "";
  return `
    <div class="kinds">
      <button data-action="kind" data-kind="1">1: Alice indicates, I color</button>
      <button data-action="kind" data-kind="2">2: I indicate, Alice colors</button>
    </div>`;
}

function statusLine(state: ViewState): string {
  const view = state.view!;
  switch (view.awaiting) {
    case "human_color":
      return `Alice indicated element ${view.indicated}; pick one of its legal colors.`;
    case "human_kind":
      return "Your move: choose the kind of this round.";
    case "human_indication":
      return "Pick an uncolored element for Alice to color.";
    case "finished":
      return "Game over.";
  }
}

function winnerBanner(state: ViewState): string {
  if (!finished(state)) return "";
  const winner = state.view!.winner;
  const verdict = verifyOutcome(state);
  const audit =
    verdict === "verified"
      ? "client re-verified the displayed classes"
      : "CLIENT VERIFICATION FAILED";
  return `<div class="banner winner-${winner}" role="status">` +
    `${winner === "alice" ? "Alice wins: everything is properly colored." : "Bob wins: the indicated element had no color."}` +
    ` <small>(${audit})</small></div>`;
}

function roundsLog(state: ViewState): string {
  const rounds = state.view?.rounds ?? [];
  if (rounds.length === 0) return "";
  const rows = rounds
    .map((r) => `<li>#${r.round}: ${r.indicator} indicated ${r.element}, ${r.colorist} colored ${r.color}</li>`)
    .join("");
  return `<ol class="rounds">${rows}</ol>`;
}

export function renderGame(state: ViewState): string {
  const toast = state.toast
    ? `<p class="toast" role="alert">${escapeHtml(state.toast)}</p>`
    : "";
  const chips = elements(state).map((e) => chip(state, e)).join("");
  return `
    <section class="board">
      <p class="status">${statusLine(state)}</p>
      ${winnerBanner(state)}
      ${toast}
      <div class="chips">${chips}</div>
      ${graphicDiagram(state)}
      ${palette(state)}
      ${kindChooser(state)}
      ${roundsLog(state)}
      <button data-action="reset" class="reset">new game</button>
    </section>`;
}

export function render(state: ViewState): string {
  return state.view === null ? renderStartForm(state) : renderGame(state);
}
