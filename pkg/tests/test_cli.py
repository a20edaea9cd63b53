import json
import subprocess
import sys
from pathlib import Path

import pytest

from gkm_embed.cli import parse_spec, run
from gkm_embed.errors import InputError

DOCS = Path(__file__).resolve().parents[1] / "docs" / "examples"
ROOK2 = str(DOCS / "rook2.json")


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_describe_rook2(capsys):
    code, out, _ = call(capsys, "describe", "--input", ROOK2)
    assert code == 0
    rows = dict(line.split(None, 1) for line in out.splitlines())
    assert rows["R_1"] == "4" and rows["quasi_regular"] == "true" and rows["rationally_smooth"] == "true"
    code, out, _ = call(capsys, "describe", "--input", ROOK2, "--format", "json")
    info = json.loads(out)
    assert info["curves"] == {"kind1": 2, "kind2": 2, "kind3": 2, "total": 6}


def test_betti_rook2(capsys):
    code, out, _ = call(capsys, "betti", "--input", ROOK2, "--max-degree", "3")
    assert code == 0 and out == "1 1 1 1\n"


def test_hilbert_and_invariants(capsys):
    assert call(capsys, "hilbert", "--input", ROOK2, "--max-degree", "3")[1] == "1 5 15 35\n"
    assert call(capsys, "invariants", "--input", ROOK2, "--max-degree", "1")[1] == "1 3\n"
    code, _, err = call(capsys, "invariants", "--input", ROOK2, "--graph", "toric")
    assert code == 1 and "diag" in err


def test_check(capsys, tmp_path):
    const = tmp_path / "c.json"
    const.write_text(json.dumps({str(v): [{"coeffs": ["2"], "monomial": [0, 0, 0, 0]}] for v in range(4)}))
    code, out, _ = call(capsys, "check", "--input", ROOK2, "--tuple", str(const))
    assert code == 0 and out == "member\n"
    bad = tmp_path / "b.json"
    bad.write_text(json.dumps({"0": [{"coeffs": ["1"], "monomial": [1, 0, 0, 0]}],
                               **{str(v): [] for v in range(1, 4)}}))
    code, out, _ = call(capsys, "check", "--input", ROOK2, "--tuple", str(bad))
    assert code == 3 and out.startswith("not a member")


def test_graph_exports(capsys, tmp_path):
    code, out, _ = call(capsys, "graph", "--input", ROOK2, "--format", "json")
    data = json.loads(out)
    assert len(data["vertices"]) == 4 and len(data["edges"]) == 6
    target = tmp_path / "g.dot"
    assert call(capsys, "toric-graph", "--input", ROOK2, "--format", "dot", "--output", str(target))[0] == 0
    assert target.read_text().count("--") == 1


def test_toric_compare_table(capsys):
    code, out, _ = call(capsys, "toric-compare", "--input", ROOK2, "--max-degree", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["isomorphism"] == [True, True, True]


def test_oracle_compare(capsys):
    code, out, _ = call(capsys, "oracle-compare", "--n", "3")
    assert code == 0 and out == "match\n"


def test_error_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"root_system": {"family": "A", "rank": 1}, "weights": [[0, 1]]}))
    code, _, err = call(capsys, "describe", "--input", str(bad))
    assert code == 1 and "coroot 0" in err
    bad.write_text(json.dumps({"root_system": {"family": "Q", "rank": 1}, "weights": [[0, 1]]}))
    assert call(capsys, "describe", "--input", str(bad))[0] == 1
    assert call(capsys, "describe", "--input", str(tmp_path / "missing.json"))[0] == 1
    assert call(capsys, "describe")[0] == 1


def test_internal_failure_exit_code(capsys, monkeypatch):
    from gkm_embed import cli
    from gkm_embed.errors import InvariantError

    def boom(*a, **k):
        raise InvariantError("synthetic", {"where": "test"})

    monkeypatch.setattr(cli, "build_gkm", boom)
    code, _, err = call(capsys, "describe", "--input", ROOK2)
    assert code == 2 and "synthetic" in err and '"where"' in err


def test_betti_verification_failure_exit_code(capsys, monkeypatch):
    from gkm_embed import cli
    from gkm_embed.ppring import HilbertProfile

    monkeypatch.setattr(cli, "hilbert_profile", lambda *a, **k: HilbertProfile([1, 3, 3, 1], "exact", nvars=4))
    assert call(capsys, "betti", "--input", ROOK2, "--max-degree", "3")[0] == 3


def test_parse_spec_defaults():
    spec = parse_spec({"root_system": {"family": "B", "rank": 2}, "weights": [[1, 1, 1]]})
    assert spec.lattice == "central" and spec.options.mode == "exact"
    with pytest.raises(InputError):
        parse_spec({"root_system": {"family": "A", "rank": 1, "lattice": "central"}, "weights": [[1, 0]]})
    with pytest.raises(InputError):
        parse_spec({"root_system": {"family": "A", "rank": 1}, "weights": [[1, 0]], "options": {"speed": 1}})


def test_module_entry_point_is_byte_stable():
    cmd = [sys.executable, "-m", "gkm_embed", "graph", "--input", ROOK2, "--format", "dot"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"graph gkm {")
