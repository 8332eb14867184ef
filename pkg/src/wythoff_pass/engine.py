"""Ground-truth rules and Sprague-Grundy tables for Wythoff's game.

Board orientation: (0,0) is the upper-left corner; x grows rightward,
y grows downward.  All legal moves strictly decrease x, y, or both, so
any square window [0,n) x [0,n) is closed under moves and the Grundy
tables computed here are exact -- no boundary approximation anywhere.

The pass variant adds a one-time pass: a state is (x, y, pass_available)
and the pass flips the flag without moving the queen.  The pass is legal
only while the flag is up and the queen is not on (0,0).
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass
from typing import Iterable, NamedTuple

DEFAULT_MAX_WINDOW = 2000


class WindowError(ValueError):
    """Raised when a coordinate falls outside a table's window."""


class ResourceBoundError(ValueError):
    """Raised when a requested window exceeds the configured maximum."""


def max_window() -> int:
    """Largest allowed table window, overridable via WYTHOFF_MAX_WINDOW."""
    raw = os.environ.get("WYTHOFF_MAX_WINDOW")
    return int(raw) if raw else DEFAULT_MAX_WINDOW


class Position(NamedTuple):
    x: int
    y: int


class PassState(NamedTuple):
    pos: Position
    pass_available: bool


class MoveKind(enum.Enum):
    LEFTWARD = "leftward"
    UPWARD = "upward"
    DIAGONAL = "diagonal"
    PASS = "pass"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    start: PassState
    end: PassState


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer absent from `values`."""
    present = set(values)
    k = 0
    while k in present:
        k += 1
    return k


def moves(pos: Position) -> list[Position]:
    """All classical targets from `pos`: leftward, upward, diagonal.

    Ordering is canonical and fixed: leftward ascending by x, upward
    ascending by y, diagonal ascending by step size.
    """
    x, y = pos
    out = [Position(u, y) for u in range(x)]
    out += [Position(x, v) for v in range(y)]
    out += [Position(x - t, y - t) for t in range(1, min(x, y) + 1)]
    return out


def moves_pass(state: PassState) -> list[Move]:
    """All pass-variant moves from `state`, pass last in canonical order.

    The pass is available iff the flag is up and x + y >= 1: it is never
    legal from the terminal square, in either reading of the rules.
    """
    (x, y), avail = state
    out = []
    for tgt in moves(state.pos):
        if tgt.y == y and tgt.x < x:
            kind = MoveKind.LEFTWARD
        elif tgt.x == x:
            kind = MoveKind.UPWARD
        else:
            kind = MoveKind.DIAGONAL
        out.append(Move(kind, state, PassState(tgt, avail)))
    if avail and x + y >= 1:
        out.append(Move(MoveKind.PASS, state, PassState(Position(x, y), False)))
    return out


@dataclass(frozen=True)
class GrundyTable:
    """Dense Grundy tables over [0,n) x [0,n), one layer per pass flag.

    `classical[y][x]` is the classical Grundy value; `with_pass[y][x]` is
    the value of state (x, y, pass_available=True).  The flag-down layer
    of the pass game coincides with `classical`, so it is not stored.
    """

    window_size: int
    classical: tuple[tuple[int, ...], ...]
    with_pass: tuple[tuple[int, ...], ...]

    def _check(self, x: int, y: int) -> None:
        n = self.window_size
        if not (0 <= x < n and 0 <= y < n):
            raise WindowError(f"({x},{y}) outside window [0,{n})")

    def grundy(self, pos: Position) -> int:
        self._check(pos[0], pos[1])
        return self.classical[pos[1]][pos[0]]

    def grundy_pass(self, state: PassState) -> int:
        (x, y), avail = state
        self._check(x, y)
        return self.with_pass[y][x] if avail else self.classical[y][x]


def grundy(pos: Position, table: GrundyTable) -> int:
    return table.grundy(pos)


def grundy_pass(state: PassState, table: GrundyTable) -> int:
    return table.grundy_pass(state)


def _build_classical_naive(n: int) -> list[list[int]]:
    g = [[0] * n for _ in range(n)]
    for y in range(n):
        for x in range(n):
            if x == 0 and y == 0:
                continue
            vals = {g[y][u] for u in range(x)}
            vals.update(g[v][x] for v in range(y))
            vals.update(g[y - t][x - t] for t in range(1, min(x, y) + 1))
            g[y][x] = mex(vals)
    return g


def _build_pass_layer_naive(n: int, classical: list[list[int]]) -> list[list[int]]:
    # flag-up layer: ordinary moves stay in this layer, the pass drops
    # into the classical layer at the same square
    g = [[0] * n for _ in range(n)]
    for y in range(n):
        for x in range(n):
            if x == 0 and y == 0:
                continue
            vals = {g[y][u] for u in range(x)}
            vals.update(g[v][x] for v in range(y))
            vals.update(g[y - t][x - t] for t in range(1, min(x, y) + 1))
            vals.add(classical[y][x])
            g[y][x] = mex(vals)
    return g


def _mex_of_sources(sources: list[list[int]], extra: int | None, bound: int) -> int:
    seen = bytearray(bound + 2)
    for src in sources:
        for v in src:
            if v <= bound:
                seen[v] = 1
    if extra is not None and extra <= bound:
        seen[extra] = 1
    m = 0
    while seen[m]:
        m += 1
    return m


def _build_layer_fast(n: int, classical: list[list[int]] | None) -> list[list[int]]:
    # Keeps a transposed copy and per-diagonal lists so each cell's
    # predecessors come out as slices instead of strided walks.
    g = [[0] * n for _ in range(n)]
    gt = [[0] * n for _ in range(n)]
    diags: dict[int, list[int]] = {}
    for y in range(n):
        row = g[y]
        for x in range(n):
            diag = diags.setdefault(x - y, [])
            if x == 0 and y == 0:
                diag.append(0)
                continue
            extra = classical[y][x] if classical is not None else None
            m = _mex_of_sources([row[:x], gt[x][:y], diag], extra, x + y)
            row[x] = m
            gt[x][y] = m
            diag.append(m)
    return g


def build_grundy_table(window_size: int, builder: str = "fast") -> GrundyTable:
    """Compute both layers over [0,window_size) x [0,window_size).

    `builder` is "fast" (slice-based gathering) or "naive" (direct
    per-cell set construction); both produce identical tables.
    """
    if window_size < 1:
        raise ValueError("window_size must be >= 1")
    if window_size > max_window():
        raise ResourceBoundError(
            f"window {window_size} exceeds maximum {max_window()}"
        )
    if builder == "naive":
        classical = _build_classical_naive(window_size)
        with_pass = _build_pass_layer_naive(window_size, classical)
    elif builder == "fast":
        classical = _build_layer_fast(window_size, None)
        with_pass = _build_layer_fast(window_size, classical)
    else:
        raise ValueError(f"unknown builder {builder!r}")
    return GrundyTable(
        window_size=window_size,
        classical=tuple(tuple(r) for r in classical),
        with_pass=tuple(tuple(r) for r in with_pass),
    )


# -- export / import ---------------------------------------------------------

def table_to_csv(table: GrundyTable) -> str:
    lines = [f"# window={table.window_size}", "# classical"]
    lines += [",".join(map(str, row)) for row in table.classical]
    lines.append("# with_pass")
    lines += [",".join(map(str, row)) for row in table.with_pass]
    return "\n".join(lines) + "\n"


def table_from_csv(text: str) -> GrundyTable:
    lines = text.strip().split("\n")
    if not lines[0].startswith("# window="):
        raise ValueError("missing window header")
    n = int(lines[0].split("=", 1)[1])
    if lines[1] != "# classical" or lines[2 + n] != "# with_pass":
        raise ValueError("malformed table csv")
    parse = lambda ls: tuple(tuple(int(v) for v in l.split(",")) for l in ls)
    return GrundyTable(
        window_size=n,
        classical=parse(lines[2 : 2 + n]),
        with_pass=parse(lines[3 + n : 3 + 2 * n]),
    )


def table_to_json(table: GrundyTable) -> str:
    obj = {
        "n": table.window_size,
        "classical": [list(r) for r in table.classical],
        "with_pass": [list(r) for r in table.with_pass],
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def table_from_json(text: str) -> GrundyTable:
    obj = json.loads(text)
    return GrundyTable(
        window_size=obj["n"],
        classical=tuple(tuple(r) for r in obj["classical"]),
        with_pass=tuple(tuple(r) for r in obj["with_pass"]),
    )
