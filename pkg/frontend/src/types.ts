/** Shared types mirroring the play server's JSON payloads. */

export type Mode = "classic" | "modified";
export type Role = "alice" | "bob";
export type Awaiting = "human_color" | "human_indication" | "human_kind" | "finished";

export interface RoundRecord {
  round: number;
  indicator: Role;
  element: number;
  colorist: Role;
  color: number;
}

/** Body of GET /games/{id} and successful POST /games/{id}/move. */
export interface GameView {
  uncolored: number[];
  coloring: Record<string, number>;
  indicated: number | null;
  legal_colors: number[];
  awaiting: Awaiting;
  winner: Role | null;
  rounds: RoundRecord[];
}

export interface ApiErrorBody {
  error: string;
  legal_colors?: number[];
  legal_elements?: number[];
  legal_kinds?: number[];
}
