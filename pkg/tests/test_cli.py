import json

import pytest

from wythoff_pass.cli import main
from wythoff_pass.engine import table_from_csv, table_from_json


class TestTable:
    def test_csv_export(self, tmp_path):
        out = tmp_path / "t.csv"
        assert main(["table", "-n", "12", "--out", str(out)]) == 0
        table = table_from_csv(out.read_text())
        assert table.window_size == 12
        assert table.classical[0][0] == 0

    def test_json_export(self, tmp_path):
        out = tmp_path / "t.json"
        assert main(["table", "-n", "12", "--format", "json", "--out", str(out)]) == 0
        table = table_from_json(out.read_text())
        assert table.window_size == 12

    def test_round_trip_through_import(self, tmp_path):
        out = tmp_path / "t.csv"
        main(["table", "-n", "12", "--out", str(out)])
        text = out.read_text()
        from wythoff_pass.engine import table_to_csv

        assert table_to_csv(table_from_csv(text)) == text


class TestVerify:
    def test_exit_zero_and_text(self, capsys):
        assert main(["verify", "-n", "20"]) == 0
        out = capsys.readouterr().out
        assert "overall: PASS" in out

    def test_json_output(self, capsys):
        assert main(["verify", "-n", "20", "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["overall"] is True


class TestEval:
    def test_cold_position(self, capsys):
        assert main(["eval", "3", "5", "-n", "20"]) == 0
        out = capsys.readouterr().out
        assert "G_classical=0" in out
        assert "P-position, no winning move" in out

    def test_a_member_with_pass(self, capsys):
        assert main(["eval", "2", "2", "--pass-available", "-n", "20"]) == 0
        out = capsys.readouterr().out
        assert "N-position" in out
        assert "winning move" in out


class TestPlot:
    def test_classic_svg(self, tmp_path):
        out = tmp_path / "p.svg"
        assert main(["plot", "-n", "30", "classic", "--out", str(out)]) == 0
        text = out.read_text()
        assert text.startswith("<svg")
        assert "circle" in text

    def test_pass_svg_with_overlay(self, tmp_path):
        out = tmp_path / "p.svg"
        assert main(["plot", "-n", "30", "pass", "--overlay", "--out", str(out)]) == 0
        assert "#bbbbbb" in out.read_text()


class TestPlay:
    def test_forced_win(self, capsys):
        assert main(["play", "1", "0", "-n", "20", "--seed", "3"]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert json.loads(lines[-1]) == {"winner": "engine"}

    def test_deterministic(self, capsys):
        main(["play", "9", "6", "-n", "20", "--seed", "11"])
        first = capsys.readouterr().out
        main(["play", "9", "6", "-n", "20", "--seed", "11"])
        assert capsys.readouterr().out == first
