import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from morse_resolve.cli import main
from morse_resolve.ideals import parse_ideal
from morse_resolve.morse import Matching
from morse_resolve.taylor import LabeledComplex, scarf_complex

SIX = str(FIXTURES / "six_gen.ideal")
XYZ = str(FIXTURES / "xyz_squared.ideal")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_betti_xyz(capsys):
    code, out, _ = run(capsys, "betti", XYZ)
    assert code == 0
    assert "total Betti numbers of I:   beta_0=6  beta_1=8  beta_2=3" in out
    assert "total Betti numbers of S/I: beta_0=1  beta_1=6  beta_2=8  beta_3=3" in out
    assert "  1  x1*x2*x3  2" in out


def test_betti_json(capsys):
    code, out, _ = run(capsys, "betti", SIX, "--format", "json")
    data = json.loads(out)
    assert data["total_S_mod_I"] == [1, 6, 15, 17, 7]
    assert {"i": 3, "multidegree": "x1*x2*x3*x4*x5*x6*x7*x8*x9*x10*x11", "beta": 1} in data["multigraded_I"]


def test_scarf_single_generator(capsys, tmp_path):
    f = tmp_path / "one.ideal"
    f.write_text("x1^2*x2\n")
    code, out, _ = run(capsys, "scarf", str(f))
    assert code == 0
    assert "f-vector: (1, 1)" in out and "acyclic: yes" in out


def test_scarf_json_roundtrip(capsys, tmp_path):
    out_path = tmp_path / "scarf.json"
    code, _, _ = run(capsys, "scarf", SIX, "--json-out", str(out_path))
    assert code == 0
    back = LabeledComplex.from_json(json.loads(out_path.read_text()))
    assert back == scarf_complex(parse_ideal(open(SIX).read()))


def test_taylor(capsys):
    code, out, _ = run(capsys, "taylor", SIX)
    assert "f-vector: (1, 6, 15, 20, 15, 6, 1)" in out
    assert "lcm lattice size: 52" in out


def test_matchings(capsys, tmp_path):
    out_path = tmp_path / "m.json"
    code, out, _ = run(capsys, "matchings", SIX, "--json-out", str(out_path))
    assert code == 0
    assert "minimal homogeneous pairs: 4" in out
    assert "maximal homogeneous acyclic matchings: 4" in out
    assert out.count("critical f-vector (1, 6, 15, 17, 7)") == 4
    stored = json.loads(out_path.read_text())
    assert len(stored) == 4
    Matching.from_json(stored[0])


def test_matchings_truncated(capsys):
    code, out, _ = run(capsys, "matchings", XYZ, "--enum-limit", "5")
    assert code == 0
    assert "maximal homogeneous acyclic matchings: 5 (truncated)" in out


def test_morse_by_index_and_json(capsys, tmp_path):
    dot = tmp_path / "h.dot"
    gdot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "morse", SIX, "--matching", "2", "--dot-out", str(dot), "--graph-dot-out", str(gdot))
    assert code == 0
    assert "f-vector: (1, 6, 15, 17, 7)" in out and "minimal: yes" in out
    assert "{1,2,3,5}" in out
    assert dot.read_text().startswith("digraph morse")
    assert gdot.read_text().startswith("digraph matching")

    from morse_resolve import golden

    mfile = tmp_path / "m1.json"
    mfile.write_text(json.dumps(golden.XYZ_M1.to_json()))
    code, out, _ = run(capsys, "morse", XYZ, "--matching", str(mfile))
    assert code == 0
    assert "f-vector: (1, 6, 8, 3)" in out
    assert "{4,5,6}  x1*x2*x3^2  non-simplicial  {2,4} {2,6} {4,5} {5,6}" in out


def test_morse_not_minimal(capsys):
    from morse_resolve import golden

    code, out, _ = run(capsys, "morse", XYZ, "--matching", json.dumps(golden.XYZ_M.to_json()))
    assert code == 0
    assert "minimal: no" in out


def test_morse_cyclic_matching_is_computational_error(capsys):
    cyc = [{"from": [1, 2, 3, 4, 5], "to": [1, 2, 3, 5]}, {"from": [1, 2, 3, 5, 6], "to": [1, 3, 5, 6]},
           {"from": [1, 3, 4, 5, 6], "to": [1, 3, 4, 5]}]
    code, _, err = run(capsys, "morse", XYZ, "--matching", json.dumps(cyc))
    assert code == 1 and "not acyclic" in err


def test_polyhedral_all(capsys):
    code, out, _ = run(capsys, "polyhedral", SIX, "--all")
    assert code == 0
    assert out.count(": not_polyhedral") == 4
    assert "meet of {1,2,3,5} and {1,4,5,6} has maximal common cells {1,4}, {1,5}" in out
    assert "meet of {1,3,4,6} and {2,3,4,5} has maximal common cells {1,4}, {3,4}" in out
    assert "exists polyhedral maximal matching: no (checked 4)" in out


def test_reproduce_paper(capsys):
    code, out, _ = run(capsys, "reproduce-paper")
    assert code == 0
    assert out.count("PASS") == 11 and "FAIL" not in out
    assert "11/11 claims passed" in out


def test_random_ideal(capsys, tmp_path):
    code, out, _ = run(capsys, "random-ideal", "--gens", "4", "--vars", "3", "--seed", "5")
    assert code == 0
    ideal = parse_ideal(out)
    assert ideal.r == 4 and ideal.n == 3
    _, again, _ = run(capsys, "random-ideal", "--gens", "4", "--vars", "3", "--seed", "5")
    assert again == out
    path = tmp_path / "r.ideal"
    run(capsys, "random-ideal", "--gens", "3", "--vars", "4", "--seed", "1", "-o", str(path))
    assert parse_ideal(path.read_text()).r == 3


def test_deterministic_output(capsys):
    first = run(capsys, "polyhedral", XYZ, "--enum-limit", "20", "--all")
    second = run(capsys, "polyhedral", XYZ, "--enum-limit", "20", "--all")
    assert first == second


def test_missing_file(capsys):
    code, _, err = run(capsys, "betti", "does/not/exist.ideal")
    assert code == 2 and "no such file" in err


def test_parse_error_line(capsys, tmp_path):
    f = tmp_path / "bad.ideal"
    f.write_text("n=2\nx1\nx3\n")
    code, _, err = run(capsys, "betti", str(f))
    assert code == 2 and "line 3" in err


def test_guard_error(capsys):
    code, _, err = run(capsys, "taylor", SIX, "--max-gens", "4")
    assert code == 1 and "max-gens" in err
    code, _, err = run(capsys, "matchings", SIX, "--max-enum-gens", "5")
    assert code == 1 and "max-enum-gens" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["betti", SIX, "--max-gens", "0"])
    assert e.value.code == 2
    code, _, err = run(capsys, "morse", SIX, "--matching", "7")
    assert code == 2 and "out of range" in err
    code, _, err = run(capsys, "morse", SIX, "--matching", "{bad")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "morse_resolve", "betti", XYZ, "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["total_I"] == [6, 8, 3]


def test_thread_env_is_honoured(capsys, monkeypatch):
    monkeypatch.setenv("MORSE_RESOLVE_THREADS", "2")
    from morse_resolve.parallel import worker_count

    assert worker_count(1000) == 2
    monkeypatch.setenv("MORSE_RESOLVE_THREADS", "0")
    assert worker_count(10) == 1
    code, out, _ = run(capsys, "betti", XYZ)
    assert code == 0
