import io
import json

import pytest

from coloring_complexes import verification
from coloring_complexes.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    k3 = tmp_path / "k3.graph"
    k3.write_text("3 3\n1 2\n1 3\n2 3\n")
    c4 = tmp_path / "c4.graph"
    c4.write_text("4 4\n1 2\n2 3\n3 4\n1 4\n")
    b3 = tmp_path / "b3.arr"
    b3.write_text("3 9\n" + "".join(
        f"{k} {i} {j}\n" for k in ("eq", "ne") for i in (1, 2, 3) for j in (1, 2, 3) if i < j
    ) + "zero 1\nzero 2\nzero 3\n")
    bad = tmp_path / "bad.graph"
    bad.write_text("3 2\n1 2\n1 9\n")
    return {"k3": str(k3), "c4": str(c4), "b3": str(b3), "bad": str(bad)}


class TestCommands:
    def test_chromatic(self, files):
        code, out, _ = call("chromatic", files["k3"])
        assert code == 0 and out.strip() == "t^3 - 3t^2 + 2t"
        code, out, _ = call("chromatic", files["c4"], "--format", "json")
        assert json.loads(out)["coefficients_descending"] == ["1", "-4", "6", "-3", "0"]

    def test_hvector(self, files):
        code, out, _ = call("hvector", "color", files["k3"], "--format", "json")
        assert code == 0 and json.loads(out)["h"] == ["1", "5", "0", "0"]
        code, out, _ = call("hvector", "unipolar", files["k3"])
        assert "h: (1, 2)" in out
        code, out, _ = call("hvector", "bn", files["b3"], "--format", "json")
        d = json.loads(out)
        assert d["rank"] == "3" and d["chi"] == "t^3 - 9t^2 + 23t - 15"
        code, out, _ = call("hvector", "matroid", "--chi", "1,-31,310,-1240,1984,-1024", "--format", "json")
        assert json.loads(out)["h"] == ["1", "58", "750", "-1678", "4589", "0", "0"]

    def test_complex(self, files):
        code, out, _ = call("complex", "color", files["c4"], "--betti", "--format", "json")
        d = json.loads(out)
        assert code == 0 and d["reduced_betti"]["1"] == "13" and d["pure"] is True
        code, out, _ = call("complex", "unipolar", files["k3"], "--dump-faces")
        assert "vertex: 1" in out and "2,3" in out
        code, out, _ = call("complex", "bn", files["b3"], "--format", "json")
        assert json.loads(out)["f"] == ["26", "72"]

    def test_check(self):
        code, out, _ = call("check", "mvector", "1,2,4", "--format", "json")
        d = json.loads(out)
        assert code == 0 and d["is_m_vector"] is False and d["witness"] == "1"
        code, out, _ = call("check", "ced", "1,6,47,0,0")
        assert "condition 2 (h_i <= h_(d-i)): False" in out

    def test_charpoly(self, files):
        code, out, _ = call("charpoly", files["b3"])
        assert code == 0 and out.splitlines() == ["t^3 - 9t^2 + 23t - 15", "rank: 3"]

    def test_corpus_ledgers(self):
        code, out, _ = call("verify-bridges", "--max-n", "3")
        assert code == 0 and "overall: all match" in out
        code, out, _ = call("verify-inequalities", "--max-n", "3", "--format", "json")
        assert code == 0 and json.loads(out)["overall"] is True


class TestExitCodes:
    def test_verify_paper(self, monkeypatch):
        code, out, _ = call("verify-paper")
        assert code == 0 and "overall: all match (14/14)" in out
        bad = dict(verification.PAPER_EXPECTED, **{"Ex-PG26.h3": -65637})
        monkeypatch.setattr(verification, "PAPER_EXPECTED", bad)
        code, out, _ = call("verify-paper")
        assert code == 1 and "MISMATCH" in out

    def test_parse_error_names_file_and_line(self, files):
        code, _, err = call("chromatic", files["bad"])
        assert code == 2 and f"{files['bad']}:3:" in err

    def test_missing_file(self, tmp_path):
        assert call("chromatic", str(tmp_path / "none"))[0] == 2

    def test_usage(self):
        assert call()[0] == 2
        assert call("check", "mvector", "1,x")[0] == 2
        assert call("hvector", "matroid")[0] == 2
        assert call("hvector", "color")[0] == 2

    def test_precondition_violation(self):
        # a non-monic chi
        assert call("hvector", "matroid", "--chi", "2,-1")[0] == 2

    def test_json_is_deterministic(self, files):
        a = call("complex", "color", files["k3"], "--format", "json", "--dump-faces")
        assert a == call("complex", "color", files["k3"], "--format", "json", "--dump-faces")
