"""Perfect-play engine and verifier for Wythoff's game with a pass."""

from .characterization import beatty_pair, is_p_pass, is_t0, is_t1
from .engine import (
    GrundyTable,
    Move,
    MoveKind,
    PassState,
    Position,
    build_grundy_table,
    mex,
    moves,
    moves_pass,
)
from .strategy import best_move, playout
from .verifier import verify_all

__all__ = [
    "GrundyTable",
    "Move",
    "MoveKind",
    "PassState",
    "Position",
    "beatty_pair",
    "best_move",
    "build_grundy_table",
    "is_p_pass",
    "is_t0",
    "is_t1",
    "mex",
    "moves",
    "moves_pass",
    "playout",
    "verify_all",
]
