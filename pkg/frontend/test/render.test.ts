import { describe, expect, it } from "vitest";

import { parseMatroidText } from "../src/matroids.js";
import { render, renderGame, renderStartForm } from "../src/render.js";
import { initialState, type ViewState } from "../src/state.js";
import type { GameView } from "../src/types.js";

const K4_TEXT = "graphic 4 6\n0 2\n2 1\n0 3\n3 1\n0 1\n2 3\n";

function gameState(partial: Partial<GameView>): ViewState {
  return {
    ...initialState(),
    gameId: "g1",
    matroidText: K4_TEXT,
    spec: parseMatroidText(K4_TEXT),
    view: {
      uncolored: [0, 1, 2, 3, 4, 5],
      coloring: {},
      indicated: null,
      legal_colors: [],
      awaiting: "human_kind",
      winner: null,
      rounds: [],
      ...partial,
    },
  };
}

describe("start form", () => {
  it("renders the form until a game exists", () => {
    const html = render(initialState());
    expect(html).toContain("matroid-text");
    expect(html).toContain('data-action="start"');
    expect(html).not.toContain("chips");
  });

  it("shows server rejections inline", () => {
    const html = renderStartForm({ ...initialState(), formError: "line 1: unknown family" });
    expect(html).toContain("line 1: unknown family");
    expect(html).toContain('class="error"');
  });

  it("escapes untrusted text", () => {
    const html = renderStartForm({ ...initialState(), formError: "<img src=x>" });
    expect(html).not.toContain("<img");
    expect(html).toContain("&lt;img");
  });
});

describe("board", () => {
  it("renders one chip per element and an edge diagram for graphic matroids", () => {
    const html = renderGame(gameState({}));
    expect(html.match(/<button class="chip[" ]/g)).toHaveLength(6);
    expect(html).toContain("<svg");
    expect(html.match(/<line /g)).toHaveLength(6);
  });

  it("palette contains exactly the legal colors", () => {
    const html = renderGame(gameState({
      awaiting: "human_color", indicated: 4, legal_colors: [2],
    }));
    expect(html).toContain('data-action="color" data-color="2"');
    expect(html).not.toContain('data-color="1"');
  });

  it("no actionable control outside the human phases", () => {
    const waiting = gameState({ awaiting: "finished", winner: "alice", uncolored: [] });
    const html = renderGame(waiting);
    expect(html).not.toContain('data-action="color"');
    expect(html).not.toContain('data-action="indicate"');
    expect(html).not.toContain('data-action="kind"');
  });

  it("chips become clickable only during indication", () => {
    const html = renderGame(gameState({ awaiting: "human_indication", uncolored: [2, 5] }));
    expect(html).toContain('data-action="indicate" data-element="2"');
    expect(html).toContain('data-action="indicate" data-element="5"');
    expect(html).not.toContain('data-element="0"');
  });

  it("kind chooser appears in the kind phase", () => {
    const html = renderGame(gameState({ awaiting: "human_kind" }));
    expect(html).toContain('data-kind="1"');
    expect(html).toContain('data-kind="2"');
  });

  it("winner banner matches the verdict and reports client verification", () => {
    const aliceWin = renderGame(gameState({
      awaiting: "finished",
      winner: "alice",
      uncolored: [],
      coloring: { "0": 1, "1": 1, "2": 1, "3": 2, "4": 2, "5": 2 },
    }));
    expect(aliceWin).toContain("Alice wins");
    expect(aliceWin).toContain("client re-verified");

    const bobWin = renderGame(gameState({
      awaiting: "finished",
      winner: "bob",
      uncolored: [4, 5],
      coloring: { "0": 1, "1": 1, "2": 2, "3": 2 },
    }));
    expect(bobWin).toContain("Bob wins");
  });

  it("409 toast text is rendered", () => {
    const state = { ...gameState({}), toast: "not your turn" };
    expect(renderGame(state)).toContain("not your turn");
  });

  it("rounds log lists every recorded round", () => {
    const html = renderGame(gameState({
      rounds: [
        { round: 1, indicator: "alice", element: 0, colorist: "bob", color: 1 },
        { round: 2, indicator: "bob", element: 3, colorist: "alice", color: 2 },
      ],
    }));
    expect(html).toContain("#1: alice indicated 0, bob colored 1");
    expect(html).toContain("#2: bob indicated 3, alice colored 2");
  });
});
