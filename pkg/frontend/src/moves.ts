// Queen-move geometry, mirrored from the server rules so illegal clicks
// are rejected locally without a round trip.  The server remains the
// authority: the contract test checks this module square-for-square
// against what the API actually accepts.

import type { GameState, MoveKind, Square } from "./types.js";

/** Direction of the move from the queen to a target square, if any. */
export function moveKindFor(state: GameState, target: Square): MoveKind | null {
  const dx = state.x - target.x;
  const dy = state.y - target.y;
  if (target.x < 0 || target.y < 0) return null;
  if (dy === 0 && dx > 0) return "leftward";
  if (dx === 0 && dy > 0) return "upward";
  if (dx === dy && dx > 0) return "diagonal";
  return null;
}

export function isLegalTarget(state: GameState, target: Square): boolean {
  return moveKindFor(state, target) !== null;
}

/** Every square the queen may move to, toward the upper-left corner. */
export function legalTargets(state: GameState): Square[] {
  const out: Square[] = [];
  for (let u = 0; u < state.x; u++) out.push({ x: u, y: state.y });
  for (let v = 0; v < state.y; v++) out.push({ x: state.x, y: v });
  const steps = Math.min(state.x, state.y);
  for (let t = 1; t <= steps; t++) {
    out.push({ x: state.x - t, y: state.y - t });
  }
  return out;
}

/** Pass is legal iff it is unused and the queen is off the corner. */
export function passAllowed(state: GameState): boolean {
  return state.pass && state.x + state.y >= 1;
}
