export interface Square {
  x: number;
  y: number;
}

export interface GameState {
  x: number;
  y: number;
  pass: boolean;
}

export type MoveKind = "leftward" | "upward" | "diagonal" | "pass";

export interface MoveJson {
  kind: MoveKind;
  from: GameState;
  to: GameState;
}

export interface EvalResponse {
  grundy_classical: number;
  grundy_pass: number;
  is_p: boolean;
  best_move: MoveJson | null;
}

export interface SessionResponse {
  session_id: string;
  state: GameState;
  engine_move: MoveJson | null;
  winner: string | null;
}

export interface MoveResponse {
  state: GameState;
  engine_move: MoveJson | null;
  winner: string | null;
}

export type Status =
  | "human_turn"
  | "engine_thinking"
  | "human_won"
  | "engine_won";
