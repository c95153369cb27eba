import json

import pytest

from polyjoin import fileformats as ff
from polyjoin.cli import run
from polyjoin.complex_core import boundary, ghost, join
from polyjoin.corpus import PENTAGON_HREP, pentagon
from polyjoin.errors import MalformedInputError


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "bd3": write(tmp_path, "bd3", "vertices: 3\nfaces: 1 2; 1 3; 2 3\n"),
        "c5": write(tmp_path, "c5", "# pentagon\nvertices: 5\nfaces: 1 2; 2 3;\n   3 4; 4 5; 5 1  # wraps\n"),
        "o2": write(tmp_path, "o2", "vertices: 2\nfaces:\n"),
        "bd2": write(tmp_path, "bd2", ff.format_complex(boundary(2))),
        "pent": write(tmp_path, "pent", "dimension: 2\nhalfspaces:\n"
                      + "\n".join(" ".join(map(str, a + [b])) for a, b in zip(*PENTAGON_HREP)) + "\n"),
        "tmp": tmp_path,
    }


def test_parse_complex_roundtrip():
    for K in (pentagon(), ghost(3), join(boundary(2), boundary(3))):
        assert ff.parse_complex(ff.format_complex(K)) == K


def test_parse_errors_have_positions():
    with pytest.raises(MalformedInputError, match="line 2, column 13"):
        ff.parse_complex("vertices: 3\nfaces: 1 2; 7\n")
    with pytest.raises(MalformedInputError, match="line 1"):
        ff.parse_complex("vertices: x\nfaces:\n")
    with pytest.raises(MalformedInputError, match="missing 'faces:'"):
        ff.parse_complex("vertices: 3\n")
    with pytest.raises(MalformedInputError, match="unknown key"):
        ff.parse_complex("vertices: 3\nfaces:\ncolour: red\n")
    with pytest.raises(MalformedInputError, match="before the first"):
        ff.parse_complex("1 2\nvertices: 3\n")


def test_polytope_format_roundtrip():
    text = "ambient: 3\nrelations:\n1 1 1\n1 1/2 2\n"
    P = ff.parse_polytope(text)
    assert ff.parse_polytope(ff.format_polytope(P)) == P
    with pytest.raises(MalformedInputError, match="line 4"):
        ff.parse_polytope("ambient: 2\nrelations:\n1 1\n1 0\n")


def test_poly_golden(files, capsys):
    assert run(["poly", files["bd3"], "--kind", "beta"]) == 0
    assert capsys.readouterr().out == "1 + s*t1*t2*t3\n# m=3 n=2 field=Q\n"
    assert run(["poly", files["c5"], "--kind", "h"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1 + 3*t + t^2"
    assert run(["poly", files["bd3"], "--kind", "b", "--jobs", "1"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1 + s^-1*t^6"
    assert run(["poly", files["bd3"], "--kind", "q"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "t^3"


def test_poly_json(files, capsys):
    assert run(["poly", files["c5"], "--kind", "chi", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["meta"] == {"m": 5, "n": 2, "field": "Q"}
    assert doc["poly"] == "1 - 5*t^4 + 5*t^6 - t^10"


def test_compose_ghost_is_join(files, capsys):
    out = str(files["tmp"] / "out")
    assert run(["compose", files["o2"], files["bd3"], files["c5"], "-o", out]) == 0
    K = ff.read(out, ff.parse_complex)
    assert K == join(boundary(3), pentagon())


def test_wedge(files, capsys):
    assert run(["wedge", files["bd2"], "--lengths", "2,2"]) == 0
    assert ff.parse_complex(capsys.readouterr().out) == boundary(4)
    assert run(["wedge", files["bd2"], "--lengths", "2"]) == 2


def test_betti_lines_and_oracles(files, capsys):
    assert run(["betti", files["bd3"]]) == 0
    assert capsys.readouterr().out == "i=0 A=[] dim=1\ni=1 A=[1,2,3] dim=1\n"
    assert run(["betti", files["c5"], "--oracle", "koszul", "--field", "f2", "--jobs", "2"]) == 0
    koszul = capsys.readouterr().out
    assert run(["betti", files["c5"], "--jobs", "1"]) == 0
    assert capsys.readouterr().out == koszul


def test_betti_json(files, capsys):
    assert run(["betti", files["bd3"], "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["table"] == [{"i": 0, "A": [], "dim": 1}, {"i": 1, "A": [1, 2, 3], "dim": 1}]


def test_homology_and_checks(files, capsys):
    assert run(["homology", files["c5"]]) == 0
    assert capsys.readouterr().out == "# field=Q\ndegree=1 rank=1\n"
    assert run(["sphere-check", files["c5"], "--rank", "2", "--gorenstein"]) == 0
    assert capsys.readouterr().out.startswith("yes")
    assert run(["sphere-check", files["c5"], "--rank", "3"]) == 0
    assert capsys.readouterr().out.startswith("no")
    assert run(["nerve-check", files["c5"]]) == 0
    assert capsys.readouterr().out == "spherical rank=2\n"


def test_polytope_commands(files, capsys):
    out = str(files["tmp"] / "pent.p")
    assert run(["polytope", "normalize", files["pent"], "-o", out]) == 0
    assert run(["polytope", "nerve", out]) == 0
    assert ff.parse_complex(capsys.readouterr().out) == pentagon()
    seg = write(files["tmp"], "seg.p", "ambient: 2\nrelations:\n1 1\n")
    assert run(["polytope", "compose", seg, out, seg, "--reduce", "--check-natural"]) == 0
    captured = capsys.readouterr()
    assert "natural=yes" in captured.err
    composed = write(files["tmp"], "c.p", captured.out)
    assert run(["polytope", "nerve", composed]) == 0
    nerve = ff.parse_complex(capsys.readouterr().out)
    assert nerve.m == 7


def test_verify_command(capsys):
    assert run(["verify", "h-of-lK", "--seed", "4", "--instances", "5"]) == 0
    out = capsys.readouterr().out
    assert "seed=4" in out and out.rstrip().endswith("ok: 5 instances")


def test_exit_codes(files, tmp_path, capsys):
    bad = write(tmp_path, "bad", "vertices: 3\nfaces: 1 x\n")
    assert run(["homology", bad]) == 2
    assert "line 2, column 10" in capsys.readouterr().err
    assert run(["betti", files["c5"], "--limit", "3"]) == 3
    assert "at least 5" in capsys.readouterr().err
    assert run(["nonsense"]) == 2
    assert run(["poly", files["c5"]]) == 2
    assert run(["homology", str(tmp_path / "missing")]) == 2
    assert run(["betti", files["c5"], "--field", "f4"]) == 2


def test_verify_mismatch_exit_code(monkeypatch, capsys):
    from polyjoin import verify

    monkeypatch.setattr(verify, "check_h_of_lK", lambda K, l: {"identity": "h-of-lK", "forced": True})
    assert run(["verify", "h-of-lK", "--seed", "1", "--instances", "3"]) == 1
    out = capsys.readouterr().out
    assert "MISMATCH at instance 0" in out and "input: SimplicialComplex" in out


def test_deterministic_output(files, capsys):
    outs = set()
    for jobs in ("1", "2"):
        assert run(["poly", files["c5"], "--kind", "beta", "--jobs", jobs]) == 0
        outs.add(capsys.readouterr().out)
    assert len(outs) == 1
