"""Command-line interface: subcommand behavior and exit codes."""

from __future__ import annotations

import json

import pytest

from epimine.cli import main

from conftest import DEMO_USEQ


@pytest.fixture()
def demo_path(tmp_path):
    path = tmp_path / "demo.useq"
    path.write_text(DEMO_USEQ, encoding="utf-8")
    return path


class TestMine:
    def test_golden_run_tsv(self, demo_path, capsys):
        code = main(["mine", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.5"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "episode\tutility\tnumMinOccs\tmoSet"
        assert len(lines) == 6
        assert lines[1] == "{D,E}->B->{A,B,D}\t51\t1\t[4,6]"

    def test_json_and_out_file(self, demo_path, tmp_path, capsys):
        out_path = tmp_path / "result.json"
        code = main(
            ["mine", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.5",
             "--emit", "json", "--out", str(out_path)]
        )
        assert code == 0
        assert capsys.readouterr().out == ""
        payload = json.loads(out_path.read_text())
        assert len(payload) == 5
        assert payload[0]["episode"] == "{D,E}->B->{A,B,D}"

    def test_deterministic_output(self, demo_path, capsys):
        args = ["mine", "--input", str(demo_path), "--mtd", "3", "--min-util", "0.3"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        assert capsys.readouterr().out == first

    def test_stats_on_stderr(self, demo_path, capsys):
        code = main(
            ["mine", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.5",
             "--stats", "--no-timing"]
        )
        captured = capsys.readouterr()
        assert code == 0
        assert "candidates_visited\t" in captured.err
        assert "elapsed_s" not in captured.err

    def test_negative_mtd_usage_error(self, demo_path, capsys):
        assert main(["mine", "--input", str(demo_path), "--mtd", "-1", "--min-util", "0.5"]) == 2

    def test_missing_threshold_usage_error(self, demo_path):
        assert main(["mine", "--input", str(demo_path), "--mtd", "2"]) == 2

    def test_malformed_input_exit_2(self, tmp_path):
        bad = tmp_path / "bad.useq"
        bad.write_text("U A 1\nT 2 A:1\nT 1 A:1\n")
        assert main(["mine", "--input", str(bad), "--mtd", "2", "--min-util", "0.5"]) == 2

    def test_missing_file_exit_1(self, tmp_path):
        missing = tmp_path / "nope.useq"
        assert main(["mine", "--input", str(missing), "--mtd", "2", "--min-util", "0.5"]) == 1

    def test_transaction_format(self, tmp_path, capsys):
        tx = tmp_path / "data.tx"
        tx.write_text("1 3 5:10:1 3 6\n2 4:7:2 5\n")
        code = main(["mine", "--input", str(tx), "--format", "tx", "--mtd", "1",
                     "--min-util-abs", "5"])
        assert code == 0
        assert "episode\t" in capsys.readouterr().out


class TestOracle:
    def test_matches_miner(self, demo_path, capsys):
        main(["mine", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.5"])
        mined = capsys.readouterr().out
        code = main(["oracle", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.5"])
        assert code == 0
        assert capsys.readouterr().out == mined

    def test_budget_exit_1(self, demo_path, capsys):
        code = main(["oracle", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.5",
                     "--max-alphabet", "2"])
        assert code == 1


class TestDiff:
    def test_self_diff_empty_exit_0(self, demo_path, tmp_path, capsys):
        out = tmp_path / "a.tsv"
        main(["mine", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.5",
              "--out", str(out)])
        code = main(["diff", str(out), str(out)])
        captured = capsys.readouterr()
        assert code == 0
        assert captured.out.startswith("identical")

    def test_malformed_result_file_exit_2(self, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("episode\tutility\tnumMinOccs\tmoSet\nA\tnot-a-number\t1\t[1,1]\n")
        assert main(["diff", str(bad), str(bad)]) == 2

    def test_cross_format_diff(self, demo_path, tmp_path, capsys):
        a = tmp_path / "a.tsv"
        b = tmp_path / "b.json"
        main(["mine", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.5",
              "--out", str(a)])
        main(["mine", "--input", str(demo_path), "--mtd", "2", "--min-util", "0.55",
              "--emit", "json", "--out", str(b)])
        code = main(["diff", str(a), str(b)])
        captured = capsys.readouterr()
        assert code == 0
        assert "missing" in captured.out


class TestGenAndStats:
    def test_gen_deterministic_and_parseable(self, tmp_path, capsys):
        out_a = tmp_path / "a.useq"
        out_b = tmp_path / "b.useq"
        args = ["gen", "--time-points", "30", "--alphabet", "6", "--seed", "99"]
        assert main(args + ["--out", str(out_a)]) == 0
        assert main(args + ["--out", str(out_b)]) == 0
        assert out_a.read_text() == out_b.read_text()
        code = main(["stats", "--input", str(out_a)])
        captured = capsys.readouterr()
        assert code == 0
        assert "time_points\t30" in captured.out
        assert "alphabet_size\t6" in captured.out

    def test_stats_demo(self, demo_path, capsys):
        assert main(["stats", "--input", str(demo_path)]) == 0
        out = capsys.readouterr().out
        assert "total_utility\t94" in out

    def test_gen_invalid_config_exit_2(self, capsys):
        assert main(["gen", "--time-points", "5", "--alphabet", "2", "--events-max", "5"]) == 2


def test_version_flag(capsys):
    assert main(["--version"]) == 0
    assert "epimine" in capsys.readouterr().out
