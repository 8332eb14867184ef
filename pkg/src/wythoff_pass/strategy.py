"""Optimal-move selection and playouts.

best_move deliberately classifies targets with the closed-form
P-predicate rather than Grundy lookups, so the winning strategy
exercises the characterization end to end.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .characterization import is_p_pass
from .engine import GrundyTable, Move, PassState, moves_pass


@dataclass(frozen=True)
class MoveChoice:
    position_class: str  # "P" or "N"
    best: Move | None = None
    target_witness: PassState | None = None


def best_move(state: PassState, table: GrundyTable) -> MoveChoice:
    """First canonical move into the P-set, or no move from a P-position."""
    if is_p_pass(state, table):
        return MoveChoice(position_class="P")
    for mv in moves_pass(state):
        if is_p_pass(mv.end, table):
            return MoveChoice(position_class="N", best=mv, target_witness=mv.end)
    # unreachable when the characterization is correct: every N-position
    # has a move into the P-set
    raise AssertionError(f"N-position {state} has no move into the P-set")


def _fallback_move(state: PassState) -> Move:
    return moves_pass(state)[0]


@dataclass
class GameRecord:
    start: PassState
    moves: list[tuple[str, Move]] = field(default_factory=list)  # (mover, move)
    winner: str | None = None

    def to_jsonl(self) -> str:
        lines = []
        for mover, mv in self.moves:
            lines.append(
                json.dumps(
                    {
                        "from": {
                            "x": mv.start.pos.x,
                            "y": mv.start.pos.y,
                            "pass": mv.start.pass_available,
                        },
                        "to": {
                            "x": mv.end.pos.x,
                            "y": mv.end.pos.y,
                            "pass": mv.end.pass_available,
                        },
                        "kind": mv.kind.value,
                        "mover": mover,
                    }
                )
            )
        return "\n".join(lines) + ("\n" if lines else "")


def playout(
    start: PassState,
    opponent: str,
    seed: int,
    table: GrundyTable,
    engine_first: bool = True,
) -> GameRecord:
    """Play engine vs opponent to the end; reproducible for a fixed seed.

    The engine plays best_move (any legal move when already lost);
    `opponent` is "random" or "optimal".  The winner made the last move.
    """
    if opponent not in ("random", "optimal"):
        raise ValueError(f"unknown opponent policy {opponent!r}")
    rng = random.Random(seed)
    record = GameRecord(start=start)
    state = start
    engine_turn = engine_first
    while state.pos != (0, 0):
        if engine_turn:
            choice = best_move(state, table)
            mv = choice.best if choice.best is not None else _fallback_move(state)
            mover = "engine"
        elif opponent == "optimal":
            choice = best_move(state, table)
            mv = choice.best if choice.best is not None else _fallback_move(state)
            mover = "opponent"
        else:
            mv = rng.choice(moves_pass(state))
            mover = "opponent"
        record.moves.append((mover, mv))
        state = mv.end
        engine_turn = not engine_turn
    if record.moves:
        record.winner = record.moves[-1][0]
    else:
        record.winner = "previous"
    return record
