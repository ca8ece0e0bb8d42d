# tests/test_cli.py — subcommands, output formats and exit codes
import io
import json

import pytest

from chromapath import cli
from chromapath.cli import run
from chromapath.digraph import Digraph
from chromapath.errors import InternalInconsistency


def output(capsys):
    return json.loads(capsys.readouterr().out)


def test_chi(capsys, arclist_file, c5):
    assert run(["chi", arclist_file(c5)]) == 0
    data = output(capsys)
    assert data["chi"] == 3
    assert data["coloring"]["kind"] == "coloring"


def test_chi_with_critical_subdigraph(capsys, arclist_file):
    D = Digraph(6, frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0)}))
    assert run(["chi", arclist_file(D), "--critical", "3"]) == 0
    assert output(capsys)["critical"]["vertices"] == [0, 1, 2, 3, 4]


def test_chi_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3 3\n0 1\n1 2\n2 0\n"))
    assert run(["chi", "-"]) == 0
    assert output(capsys)["chi"] == 3


def test_p4_missing_in_t5(capsys, arclist_file, t5):
    assert run(["find", arclist_file(t5), "--p4"]) == 1
    assert output(capsys) == {"found": False, "certificate": None}


def test_p4_found(capsys, arclist_file, p4_digraph):
    assert run(["find", arclist_file(p4_digraph), "--p4"]) == 0
    assert output(capsys)["certificate"]["vertices"] == [0, 1, 2, 3, 4]


def test_pattern(capsys, arclist_file, tt):
    assert run(["find", arclist_file(tt(4)), "--pattern", "b1,f2", "--format", "text"]) == 0
    assert capsys.readouterr().out == "1 0 2 3\n"


def test_two_block_certified(capsys, arclist_file, tt, c5):
    assert run(["find", arclist_file(tt(5)), "--two-block", "2", "2"]) == 0
    assert output(capsys)["rule"] == "forest-arc"
    assert run(["find", arclist_file(c5, "c5.txt"), "--two-block", "2", "2"]) == 1
    assert output(capsys)["certificate"]["kind"] == "coloring"


def test_two_block_other_methods(capsys, arclist_file, t5, c5):
    assert run(["find", arclist_file(t5), "--two-block", "2", "2", "--method", "cor35"]) == 0
    assert output(capsys)["found"] is True
    assert run(["find", arclist_file(c5, "c5.txt"), "--two-block", "1", "1", "--method", "cor32"]) == 3
    assert "chi(D)" in capsys.readouterr().err


def test_two_block_dot_marks_the_path(capsys, arclist_file, tt):
    assert run(["find", arclist_file(tt(5)), "--two-block", "2", "2", "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert "  1 -> 4 [style=bold];" in dot
    assert "  0 -> 2;" in dot


def test_forest_formats(capsys, arclist_file, c3):
    path = arclist_file(c3)
    assert run(["forest", path]) == 0
    assert output(capsys)["height"] == 3
    assert run(["forest", path, "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert "  0 -> 1 [style=solid];" in dot
    assert "  2 -> 0 [style=dashed];" in dot
    assert run(["forest", path, "--format", "text"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "level 1: 0"


def test_circuit_and_handles(capsys, arclist_file, t5, c5):
    assert run(["circuit", arclist_file(t5), "--good", "--handles"]) == 0
    data = output(capsys)
    assert data["circuit"]["vertices"] == [0, 1, 3]
    assert data["handles"]["r"] == 6
    assert run(["circuit", arclist_file(c5, "c5.txt"), "--k", "6"]) == 1
    assert output(capsys)["found"] is False


def test_contract(capsys, arclist_file, c4, c3):
    assert run(["contract", arclist_file(c4), "--set", "1,2"]) == 0
    data = output(capsys)
    assert data["arclist"] == "3 3\n0 1\n1 2\n2 0\n"
    assert data["hub"] == 1
    assert run(["contract", arclist_file(c3, "c3.txt"), "--circuit", "0,1,2", "--format", "text"]) == 0
    assert capsys.readouterr().out == "1 0 multi\n"


def test_contract_refuses_two_way_vertex(capsys, arclist_file, c3):
    assert run(["contract", arclist_file(c3), "--set", "0,1"]) == 3
    assert "vertex 2" in capsys.readouterr().err


def test_verify(capsys):
    assert run(["verify", "--campaign", "grunbaum", "--no-cache", "--no-timing"]) == 0
    data = output(capsys)
    assert data["passed"] is True
    assert data["elapsed_ms"] is None


def test_verify_is_repeatable(capsys):
    argv = ["verify", "--campaign", "thm36", "--max-n", "5", "--samples", "5", "--seed", "1",
            "--jobs", "1", "--no-cache", "--no-timing"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


def test_verify_text(capsys):
    assert run(["verify", "--campaign", "elsahili", "--no-cache", "--format", "text"]) == 0
    assert "elsahili" in capsys.readouterr().out


@pytest.mark.parametrize("text", ["3 2\n0 1\n1 0\n", "2 1\n0 5\n", "nonsense\n"])
def test_bad_input_exits_3(capsys, tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    assert run(["chi", str(path)]) == 3
    assert "line" in capsys.readouterr().err


def test_missing_file_exits_3(capsys, tmp_path):
    assert run(["chi", str(tmp_path / "absent.txt")]) == 3
    assert "cannot read" in capsys.readouterr().err


def test_verify_beyond_the_scan_cap_exits_3(capsys):
    assert run(["verify", "--campaign", "conj38", "--max-n", "60", "--no-cache"]) == 3
    assert "capped at 12" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["find"], ["bogus"], ["verify", "--campaign", "nope"], ["chi", "--format", "xml"]])
def test_usage_errors_exit_2(capsys, argv):
    assert run(argv) == 2


def test_help_exits_0(capsys):
    assert run(["--help"]) == 0
    assert "chromapath" in capsys.readouterr().out


def test_internal_inconsistency_exits_4(capsys, monkeypatch, arclist_file, c5):
    def broken(D, k, l):
        raise InternalInconsistency("assembled coloring is not proper")

    monkeypatch.setattr(cli, "find_two_block_certified", broken)
    assert run(["find", arclist_file(c5), "--two-block", "2", "2"]) == 4
    assert "internal inconsistency" in capsys.readouterr().err
