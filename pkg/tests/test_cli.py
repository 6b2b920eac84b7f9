import subprocess
import sys

import pytest

from linpath.cli import main
from linpath.constructions import gen_complete, gen_star
from linpath.hypergraph import serialize


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def star8(tmp_path):
    f = tmp_path / "star8.h3"
    f.write_text(serialize(gen_star(3, 8, 1)))
    return str(f)


@pytest.fixture
def k4(tmp_path):
    f = tmp_path / "k4.h3"
    f.write_text(serialize(gen_complete(3, 4)))
    return str(f)


class TestGen:
    def test_star_matches_serializer(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--kind", "star", "--n", "8", "--k", "1")
        assert code == 0
        assert out == serialize(gen_star(3, 8, 1))

    def test_complete(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--kind", "complete", "--n", "4")
        assert code == 0
        assert out.startswith("p h3 4 4\n")

    def test_core(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--kind", "core", "--n", "9", "--s", "2")
        assert code == 0
        assert out.startswith("p h3 9 7\n")

    def test_bad_parameters_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--kind", "star", "--n", "4", "--k", "4")
        assert code == 2
        assert "error:" in err


class TestOracle:
    def test_path_present(self, capsys, star8):
        code, out, _ = run_cli(capsys, "oracle", "-i", star8, "--path", "2")
        assert code == 0
        assert out == "path: 2 3 1 4 5\n"

    def test_path_absent_exit_1(self, capsys, k4):
        code, out, _ = run_cli(capsys, "oracle", "-i", k4, "--path", "2")
        assert code == 1
        assert out == "absent\n"

    def test_cycle(self, capsys, tmp_path):
        f = tmp_path / "k6.h3"
        f.write_text(serialize(gen_complete(3, 6)))
        code, out, _ = run_cli(capsys, "oracle", "-i", str(f), "--cycle", "3")
        assert code == 0
        assert out.startswith("cycle: ")

    def test_cycleplus(self, capsys, tmp_path):
        f = tmp_path / "k7.h3"
        f.write_text(serialize(gen_complete(3, 7)))
        code, out, _ = run_cli(capsys, "oracle", "-i", str(f), "--cycleplus", "3")
        assert code == 0
        assert out.startswith("cycleplus: ")
        assert " closing " in out and " parallel " in out

    def test_longest(self, capsys, star8):
        code, out, _ = run_cli(capsys, "oracle", "-i", star8, "--longest", "5")
        assert code == 0
        assert out.splitlines()[0] == "longest: 2"

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(serialize(gen_star(3, 8, 1))))
        code, out, _ = run_cli(capsys, "oracle", "-i", "-", "--path", "2")
        assert code == 0 and out.startswith("path: ")

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "oracle", "-i", "/nonexistent.h3", "--path", "2")
        assert code == 2
        assert "io error:" in err


class TestFind:
    def test_finder_mode_success(self, capsys, tmp_path):
        from linpath.harness import random_min_degree_graph

        f = tmp_path / "rnd.h3"
        f.write_text(serialize(random_min_degree_graph(23, 29, seed=4)))
        code, out, _ = run_cli(capsys, "find", "-i", str(f), "--length", "3")
        assert code == 0
        assert out.startswith("path: ")
        assert len(out.split()) == 1 + 7  # "path:" plus 2t+1 vertices

    def test_trace_lines(self, capsys, tmp_path):
        from linpath.harness import random_min_degree_graph

        f = tmp_path / "rnd.h3"
        f.write_text(serialize(random_min_degree_graph(23, 29, seed=4)))
        code, out, _ = run_cli(
            capsys, "find", "-i", str(f), "--length", "3", "--trace"
        )
        assert code == 0
        lines = out.splitlines()
        assert all(l.startswith("move: ") for l in lines[:-1])
        assert lines[-1].startswith("path: ")

    def test_hypothesis_unmet_exit_1(self, capsys, star8):
        code, out, _ = run_cli(capsys, "find", "-i", star8, "--length", "3")
        assert code == 1
        assert out.startswith("absent: HypothesisUnmet")

    def test_oracle_mode(self, capsys, star8):
        code, out, _ = run_cli(
            capsys, "find", "-i", star8, "--length", "2", "--mode", "oracle"
        )
        assert code == 0
        assert out == "path: 2 3 1 4 5\n"


class TestVerify:
    def test_construction_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--construction", "star", "--n", "12", "--k", "1"
        )
        assert code == 0
        assert "check min_degree: expected 10 observed 10 PASS" in out
        assert out.rstrip().endswith("result: PASS")

    def test_exhaustive_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--exhaustive", "--n", "5",
            "--min-degree", "4", "--length", "2",
        )
        assert code == 0
        assert "check graphs_checked: expected >=1 observed 86 PASS" in out

    def test_exhaustive_counterexample_exit_1(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--exhaustive", "--n", "4",
            "--min-degree", "3", "--length", "2",
        )
        assert code == 1
        assert "result: FAIL" in out

    def test_needs_a_mode(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--n", "5")
        assert code == 2
        assert "verify needs" in err


class TestExperiment:
    ARGS = ("experiment", "--n", "23", "--length", "3", "--min-degree", "29",
            "--trials", "3", "--seed", "11")

    def test_csv_on_stdout(self, capsys):
        code, out, _ = run_cli(capsys, *self.ARGS)
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("trial_id,seed,n,delta1,t,")
        assert len(lines) == 1 + 3 + 1  # header, trials, summary

    def test_replay_byte_identical(self, capsys):
        _, first, _ = run_cli(capsys, *self.ARGS)
        _, second, _ = run_cli(capsys, *self.ARGS)
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        out_file = tmp_path / "trials.csv"
        code, out, _ = run_cli(capsys, *self.ARGS, "--out", str(out_file))
        assert code == 0
        assert out == "success_rate=1.000000\n"
        assert out_file.read_text().startswith("trial_id,")


class TestUsage:
    def test_no_command(self, capsys):
        assert run_cli(capsys, )[0] == 2

    def test_unknown_command(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2

    def test_missing_required(self, capsys):
        assert run_cli(capsys, "gen", "--kind", "star")[0] == 2

    def test_help_exit_0(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0


class TestEntryPoint:
    def test_installed_script(self):
        proc = subprocess.run(
            ["linpath", "gen", "--kind", "complete", "--n", "4"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("p h3 4 4\n")
