import json
import random

import pytest

from wythoff_pass.characterization import is_p_pass
from wythoff_pass.engine import MoveKind, PassState, Position, moves_pass
from wythoff_pass.strategy import best_move, playout


class TestBestMove:
    def test_terminal_is_p(self, table20):
        choice = best_move(PassState(Position(0, 0), True), table20)
        assert choice.position_class == "P"
        assert choice.best is None

    def test_t0_square_is_n_when_pass_up(self, table20):
        # a classically cold square turns hot while the pass is live
        choice = best_move(PassState(Position(1, 2), True), table20)
        assert choice.position_class == "N"
        assert is_p_pass(choice.best.end, table20)
        # the pass itself is the winning move: it lands on (1,2) cold
        assert choice.best.kind == MoveKind.PASS

    def test_a_member_is_n(self, table20):
        choice = best_move(PassState(Position(2, 2), True), table20)
        assert choice.position_class == "N"
        assert is_p_pass(choice.best.end, table20)
        # first P-target in canonical order is the full diagonal to (0,0)
        assert choice.best.kind == MoveKind.DIAGONAL
        assert choice.best.end == PassState(Position(0, 0), True)

    def test_witness_matches_target(self, table20):
        choice = best_move(PassState(Position(4, 0), False), table20)
        assert choice.target_witness == choice.best.end

    def test_every_n_position_has_p_target(self, table100):
        for x in range(100):
            for y in range(100):
                for avail in (False, True):
                    state = PassState(Position(x, y), avail)
                    choice = best_move(state, table100)
                    if choice.position_class == "N":
                        assert is_p_pass(choice.best.end, table100)
                    else:
                        assert choice.best is None

    def test_p_positions_only_reach_n(self, table100):
        for x in range(100):
            for y in range(100):
                for avail in (False, True):
                    state = PassState(Position(x, y), avail)
                    if not is_p_pass(state, table100):
                        continue
                    for m in moves_pass(state):
                        assert not is_p_pass(m.end, table100)


class TestPlayout:
    def test_single_forced_move(self, table20):
        rec = playout(PassState(Position(1, 0), False), "random", 0, table20)
        assert rec.winner == "engine"
        assert len(rec.moves) == 1
        assert rec.moves[0][1].end.pos == (0, 0)

    def test_start_at_terminal(self, table20):
        rec = playout(PassState(Position(0, 0), True), "random", 0, table20)
        assert rec.moves == []
        assert rec.winner == "previous"

    def test_deterministic(self, table50):
        a = playout(PassState(Position(30, 17), True), "random", 42, table50)
        b = playout(PassState(Position(30, 17), True), "random", 42, table50)
        assert a == b

    def test_engine_wins_from_n_positions(self, table50):
        rng = random.Random(5)
        wins = 0
        for _ in range(100):
            x, y = rng.randrange(50), rng.randrange(50)
            avail = rng.random() < 0.5
            state = PassState(Position(x, y), avail)
            if is_p_pass(state, table50):
                continue
            rec = playout(state, "random", rng.randrange(10**6), table50)
            assert rec.winner == "engine"
            wins += 1
        assert wins > 0

    def test_optimal_opponent(self, table50):
        # engine first from an N-position still wins against perfect play
        rec = playout(PassState(Position(10, 10), True), "optimal", 0, table50)
        assert rec.winner == "engine"

    def test_unknown_policy(self, table20):
        with pytest.raises(ValueError):
            playout(PassState(Position(1, 1), True), "bogus", 0, table20)

    def test_jsonl_record(self, table20):
        rec = playout(PassState(Position(3, 0), False), "random", 1, table20)
        lines = rec.to_jsonl().strip().split("\n")
        assert len(lines) == len(rec.moves)
        first = json.loads(lines[0])
        assert set(first) == {"from", "to", "kind", "mover"}
        assert first["mover"] == "engine"
