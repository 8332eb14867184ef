"""HTTP API over the engine for the browser UI and other clients.

Stateless evaluation plus in-memory game sessions (TTL-evicted, no
persistence; this is a demonstrator, not a game server).  The Grundy
table is built once at startup and shared read-only.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import strategy
from .characterization import is_p_pass, p_positions
from .engine import (
    GrundyTable,
    Move,
    MoveKind,
    PassState,
    Position,
    build_grundy_table,
    moves_pass,
)

DEFAULT_WINDOW = 200
SESSION_TTL_SECONDS = 3600.0


@dataclass
class Session:
    id: str
    state: PassState
    engine_plays: str  # "first" or "second"
    history: list[Move] = field(default_factory=list)
    winner: str | None = None
    touched: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionCreate(BaseModel):
    x: int
    y: int
    engine_plays: str = "second"
    pass_available: bool = True


class MoveRequest(BaseModel):
    kind: str
    to_x: int | None = None
    to_y: int | None = None


def _state_json(state: PassState) -> dict:
    return {"x": state.pos.x, "y": state.pos.y, "pass": state.pass_available}


def _move_json(mv: Move) -> dict:
    return {
        "kind": mv.kind.value,
        "from": _state_json(mv.start),
        "to": _state_json(mv.end),
    }


def create_app(
    window: int = DEFAULT_WINDOW,
    table: GrundyTable | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    table = table if table is not None else build_grundy_table(window)
    app = FastAPI(title="wythoff-pass")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    sessions_lock = threading.Lock()

    def check_window(x: int, y: int) -> None:
        if not (0 <= x < window and 0 <= y < window):
            raise HTTPException(422, f"({x},{y}) outside server window [0,{window})")

    def evict_stale() -> None:
        now = time.monotonic()
        with sessions_lock:
            stale = [
                sid
                for sid, s in sessions.items()
                if now - s.touched > SESSION_TTL_SECONDS
            ]
            for sid in stale:
                del sessions[sid]

    def get_session(sid: str) -> Session:
        evict_stale()
        with sessions_lock:
            sess = sessions.get(sid)
        if sess is None:
            raise HTTPException(404, "unknown session")
        sess.touched = time.monotonic()
        return sess

    def engine_reply(sess: Session) -> Move | None:
        # engine moves into the P-set when it can, otherwise plays the
        # first legal move and hopes for a mistake
        if sess.state.pos == (0, 0):
            return None
        choice = strategy.best_move(sess.state, table)
        mv = choice.best if choice.best is not None else moves_pass(sess.state)[0]
        sess.history.append(mv)
        sess.state = mv.end
        if sess.state.pos == (0, 0):
            sess.winner = "engine"
        return mv

    @app.get("/api/eval")
    def eval_position(
        # `pass` is a Python keyword, so the query parameter is aliased
        x: int, y: int, pass_available: bool = Query(False, alias="pass")
    ):
        check_window(x, y)
        state = PassState(Position(x, y), pass_available)
        is_p = is_p_pass(state, table)
        out = {
            "grundy_classical": table.grundy(state.pos),
            "grundy_pass": table.grundy_pass(state),
            "is_p": is_p,
            "best_move": None,
        }
        if not is_p:
            choice = strategy.best_move(state, table)
            out["best_move"] = _move_json(choice.best)
        return out

    @app.get("/api/ppositions")
    def ppositions(n: int, layer: str = "classic"):
        if layer not in ("classic", "pass"):
            raise HTTPException(422, f"unknown layer {layer!r}")
        if n > window:
            raise HTTPException(422, f"n={n} exceeds server window {window}")
        return p_positions(n, layer, table)

    @app.post("/api/session")
    def create_session(req: SessionCreate):
        check_window(req.x, req.y)
        if req.engine_plays not in ("first", "second"):
            raise HTTPException(422, "engine_plays must be 'first' or 'second'")
        if (req.x, req.y) == (0, 0):
            raise HTTPException(400, "cannot start at the terminal position")
        sess = Session(
            id=uuid.uuid4().hex,
            state=PassState(Position(req.x, req.y), req.pass_available),
            engine_plays=req.engine_plays,
        )
        engine_move = None
        if req.engine_plays == "first":
            engine_move = engine_reply(sess)
        with sessions_lock:
            sessions[sess.id] = sess
        return {
            "session_id": sess.id,
            "state": _state_json(sess.state),
            "engine_move": _move_json(engine_move) if engine_move else None,
            "winner": sess.winner,
        }

    @app.post("/api/session/{sid}/move")
    def make_move(sid: str, req: MoveRequest):
        sess = get_session(sid)
        with sess.lock:
            if sess.winner is not None:
                raise HTTPException(400, "game is over")
            state = sess.state
            if req.kind == "pass":
                if not state.pass_available:
                    raise HTTPException(400, "illegal move: pass unavailable")
                if state.pos == (0, 0):
                    raise HTTPException(400, "illegal move: pass from terminal")
                mv = Move(MoveKind.PASS, state, PassState(state.pos, False))
            else:
                if req.to_x is None or req.to_y is None:
                    raise HTTPException(400, "illegal move: missing target")
                check_window(req.to_x, req.to_y)
                target = PassState(
                    Position(req.to_x, req.to_y), state.pass_available
                )
                legal = {
                    (m.kind.value, m.end): m
                    for m in moves_pass(state)
                    if m.kind != MoveKind.PASS
                }
                mv = legal.get((req.kind, target))
                if mv is None:
                    raise HTTPException(400, "illegal move: wrong direction")
            sess.history.append(mv)
            sess.state = mv.end
            if sess.state.pos == (0, 0):
                sess.winner = "human"
                return {
                    "state": _state_json(sess.state),
                    "engine_move": None,
                    "winner": sess.winner,
                }
            engine_move = engine_reply(sess)
            return {
                "state": _state_json(sess.state),
                "engine_move": _move_json(engine_move) if engine_move else None,
                "winner": sess.winner,
            }

    @app.get("/api/session/{sid}")
    def get_session_state(sid: str):
        sess = get_session(sid)
        return {
            "session_id": sess.id,
            "state": _state_json(sess.state),
            "history": [_move_json(m) for m in sess.history],
            "winner": sess.winner,
        }

    @app.get("/api/config")
    def config():
        return {"window": window}

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
