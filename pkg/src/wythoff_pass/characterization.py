"""Closed-form position classes: Beatty pairs, exception sets, P-predicates.

Everything here that decides membership works in exact integer
arithmetic.  Floating-point golden-ratio multiples misclassify near
Beatty boundaries once n gets large, so floor(n*phi) is computed from
the integer square root of 5n^2 instead (exact for arbitrarily large n
thanks to Python's big integers).
"""

from __future__ import annotations

import json
from math import isqrt

from .engine import GrundyTable, PassState, Position

# A-positions have classical Grundy value 1; B-positions are (0,0) plus
# six positions of Grundy value 4.  Both sets are swap-symmetric and
# live inside [0,7] x [0,7].
SET_A: frozenset[Position] = frozenset(
    Position(x, y)
    for x, y in [(0, 1), (1, 0), (2, 2), (3, 6), (6, 3), (5, 7), (7, 5)]
)
SET_B: frozenset[Position] = frozenset(
    Position(x, y)
    for x, y in [(0, 0), (1, 3), (3, 1), (2, 5), (5, 2), (6, 7), (7, 6)]
)


def floor_n_phi(n: int) -> int:
    """floor(n * (1+sqrt(5))/2), exactly.

    n*sqrt(5) lies in [s, s+1) for s = isqrt(5n^2), so the floor of
    n*(1+sqrt(5))/2 is (n + s) // 2.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return (n + isqrt(5 * n * n)) // 2


def beatty_pair(n: int) -> tuple[Position, Position]:
    """The n-th cold pair of the classical game and its mirror."""
    a = floor_n_phi(n)
    return Position(a, a + n), Position(a + n, a)


def is_t0(pos: Position) -> bool:
    """Grundy-0 membership in O(1): (a, a+d) is cold iff a = floor(d*phi)."""
    a, b = sorted(pos)
    if a < 0:
        return False
    return a == floor_n_phi(b - a)


def is_t1(pos: Position, table: GrundyTable) -> bool:
    """Grundy-1 membership; needs a table, there is no known closed form."""
    return table.grundy(Position(*pos)) == 1


def t1_enumerate(limit: int, table: GrundyTable) -> list[Position]:
    """All Grundy-1 positions with both coordinates < limit, sorted."""
    if limit > table.window_size:
        raise ValueError(f"limit {limit} exceeds table window {table.window_size}")
    return [
        Position(x, y)
        for x in range(limit)
        for y in range(limit)
        if table.classical[y][x] == 1
    ]


def is_p_pass(state: PassState, table: GrundyTable) -> bool:
    """P-position predicate for the pass game, table-light.

    Flag down: the game is classical, so cold iff Grundy 0.  Flag up:
    cold iff the square is Grundy 1 or in B, and not in A.  The table is
    consulted only for the Grundy-1 test.
    """
    pos = Position(*state.pos)
    if not state.pass_available:
        return is_t0(pos)
    if pos in SET_A:
        return False
    return pos in SET_B or is_t1(pos, table)


def p_positions(limit: int, layer: str, table: GrundyTable) -> list[dict]:
    """P-positions of one layer as {x, y, pass} records, sorted."""
    if layer not in ("classic", "pass"):
        raise ValueError(f"unknown layer {layer!r}")
    avail = layer == "pass"
    return [
        {"x": x, "y": y, "pass": avail}
        for x in range(limit)
        for y in range(limit)
        if is_p_pass(PassState(Position(x, y), avail), table)
    ]


def p_positions_json(limit: int, layer: str, table: GrundyTable) -> str:
    return json.dumps(p_positions(limit, layer, table)) + "\n"
