import io
import json
import subprocess
import sys

import pytest

from fareytree import _levels as L
from fareytree.cli import CliConfig, run
from fareytree.errors import DomainError


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_seq():
    assert call("seq", "3", "2") == (0, "0/1 1/2 1/1 3/2 2/1 3/1 1/0\n")


def test_intervals():
    assert call("intervals", "1", "1") == (0, "(0/1,1/1)\n(1/1,1/0)\n")


def test_table():
    code, out = call("table", "4", "3", "5/4")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [
        ["6", "9", "11", "12"], ["3", "5", "8", "10"], ["1", "2", "4", "7"]
    ]
    code, out = call("table", "4", "3", "5/4", "--json")
    assert json.loads(out)["rows"][0] == [1, 2, 4, 7]


def test_delta():
    assert call("delta", "4", "3", "1/1") == (0, "3\n")
    assert call("delta", "4", "3", "1/1", "--left") == (0, "5\n")
    assert call("delta", "3", "4", "1/1", "--right") == (0, "-5\n")


def test_suranyi():
    assert call("suranyi", "1/1", "3/2", "3", "2") == (0, "7 6 4 3\n")


def test_decompress():
    assert call("decompress", "7", "6", "4", "3") == (0, "bottom 1 2 4 7\nleft 1 3 6\n")


def test_oracle_lshapes():
    code, out = call("oracle", "lshapes", "4", "3")
    assert code == 0 and len(out.splitlines()) == 6
    assert "1 2 4 7 | 1 3 6" in out.splitlines()


def test_tree_build(tmp_path):
    code, out = call("tree", "build", "--kind", "terminal", "--height", "1", "--format", "dot")
    assert code == 0 and out.count("->") == 2
    path = tmp_path / "t.json"
    code, out = call("tree", "build", "--kind", "young", "--height", "3", "-o", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["height"] == 3


def test_tree_verify():
    code, out = call("tree", "verify", "--height", "4", "--mode", "all")
    assert code == 0 and out.startswith("PASS")
    assert call("tree", "verify", "--height", "5", "--mode", "theorem1", "--stream", "--jobs", "2")[0] == 0
    assert call("tree", "verify", "--mode", "corollary2", "--max-sum", "6")[0] == 0


def test_verify_failure_exit_1(monkeypatch, capsys):
    real = L.suranyi_level

    def broken(rows):
        out = real(rows)
        out[out[:, 0] == 2, 3] += 1
        return out

    monkeypatch.setattr(L, "suranyi_level", broken)
    code, out = call("tree", "verify", "--height", "3")
    assert code == 1 and out.startswith("FAIL")
    err = capsys.readouterr().err
    assert err.startswith("error: verification failed") and err.count("\n") == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["seq", "1.5", "2"],
        ["seq", "-1", "2"],
        ["table", "2", "2", "x"],
        ["table", "2", "2", "0.5"],
        ["table", "4", "3", "1/1"],
        ["table", "0", "3", "1/2"],
        ["suranyi", "0", "1/3", "3", "2"],
        ["decompress", "5", "5", "3", "2"],
        ["oracle", "lshapes", "6", "6"],
        ["oracle", "lshapes", "2", "2", "--guard", "1"],
        ["tree", "verify", "--height", "400"],
        ["tree", "verify", "--jobs", "0"],
        ["tree", "verify", "--guard", "1"],
        ["tree", "build", "--kind", "farey", "--height", "40", "--max-vertices", "10"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, out = call(*argv)
    assert code == 2 and out == ""
    err = capsys.readouterr().err
    assert err.startswith("error: ") and err.count("\n") == 1


def test_config_invariants():
    with pytest.raises(DomainError):
        CliConfig(height=-1)
    with pytest.raises(DomainError):
        CliConfig(guard=1)
    with pytest.raises(DomainError):
        CliConfig(jobs=0)


def test_deterministic_across_jobs():
    a = call("tree", "verify", "--height", "12", "--jobs", "1")[1].split()
    b = call("tree", "verify", "--height", "12", "--jobs", "3")[1].split()
    drop = lambda xs: [x for x in xs if not x.startswith("elapsed=")]
    assert drop(a) == drop(b)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fareytree", "suranyi", "1/1", "3/2", "3", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "7 6 4 3\n"
