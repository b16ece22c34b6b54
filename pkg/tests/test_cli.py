import csv
import io
import json

import pytest

from pbwdeg.cli import main
from pbwdeg.verify import FIELDS


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv("PBW_CACHE_DIR", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_degree_sl2(capsys):
    code, out, _ = run(capsys, "degree", "--type", "A", "--rank", "1", "--weight", "3")
    assert code == 0
    assert json.loads(out)["coeffs"] == [1, 1, 1, 1]


def test_degree_a2(capsys):
    code, out, _ = run(capsys, "degree", "--type", "A", "--rank", "2", "--weight", "1,0", "--per-weight")
    data = json.loads(out)
    assert code == 0 and data["coeffs"] == [1, 2] and data["degree"] == 1 and data["dim"] == 3
    assert sorted(tuple(e["weight"]) for e in data["per_weight"]) == [(-1, 1), (0, -1), (1, 0)]


@pytest.mark.parametrize("argv", [
    ["degree", "--type", "A", "--rank", "2", "--weight=-1,0"],
    ["degree", "--type", "A", "--rank", "2", "--weight", "1"],
    ["degree", "--type", "A", "--rank", "2", "--weight", "x,y"],
    ["degree", "--type", "D", "--rank", "3", "--weight", "1,0,0"],
    ["degree", "--type", "Q", "--rank", "2", "--weight", "1,0"],
    ["degree", "--weight", "1,0"],
    ["degree", "--type", "A", "--rank", "2", "--weight", "1,0", "--max-dim", "0"],
    ["kostant", "--type", "A", "--rank", "2", "--nu=-1,0"],
    ["verify", "--family", "XZ"],
    ["verify", "--family", "A", "--max-rank", "0"],
    ["additivity", "--type", "A", "--rank", "2", "--weights", "1,0"],
    ["bogus"],
])
def test_invalid_input_exits_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_cap_exceeded_exits_3(capsys):
    code, _, err = run(capsys, "degree", "--type", "E", "--rank", "8", "--weight", "0,0,0,0,0,0,0,1",
                       "--max-dim", "100")
    assert code == 3 and "--force" in err


def test_force_lifts_cap(capsys):
    code, out, _ = run(capsys, "degree", "--type", "G", "--rank", "2", "--weight", "1,0", "--max-dim", "1", "--force")
    assert code == 0 and json.loads(out)["coeffs"] == [1, 5, 1]


def test_kostant(capsys):
    code, out, _ = run(capsys, "kostant", "--type", "A", "--rank", "2", "--nu", "1,1")
    assert code == 0 and json.loads(out)["coeffs"] == [0, 1, 1]


def test_additivity(capsys):
    code, out, _ = run(capsys, "additivity", "--type", "A", "--rank", "2", "--weights", "1,0;0,1")
    data = json.loads(out)
    assert code == 0 and data["degrees"] == [1, 1, 2] and data["result"] == "PASS"


def test_verify_g2(capsys):
    code, out, _ = run(capsys, "verify", "--family", "G", "--max-rank", "2")
    data = json.loads(out)
    assert code == 0
    assert [(r["node"], r["computed_degree"], r["verdict"]) for r in data["rows"]] == \
        [(1, 2, "VERIFIED"), (2, 2, "VERIFIED")]
    assert data["summary"]["verified"] == 2


def test_verify_b4_notes_strict_bound(capsys):
    code, out, _ = run(capsys, "verify", "--family", "B", "--max-rank", "4")
    rows = {(r["type"], r["node"]): r for r in json.loads(out)["rows"]}
    b43 = rows[("B4", 3)]
    assert code == 0
    assert (b43["computed_degree"], b43["kostant_mindeg"], b43["kostant_strict"]) == (4, 3, True)


def test_verify_csv_columns_match_row_fields(capsys):
    code, out, _ = run(capsys, "verify", "--family", "G", "--max-rank", "2", "--format", "csv")
    reader = csv.DictReader(io.StringIO(out))
    assert reader.fieldnames == FIELDS
    assert len(list(reader)) == 2


def test_verify_markdown(capsys):
    code, out, _ = run(capsys, "verify", "--family", "G", "--max-rank", "2", "--format", "md")
    assert "## G2" in out and "| node | dim | computed | table | recipe |" in out


def test_verify_over_cap_is_unresolved_not_failure(capsys):
    code, out, _ = run(capsys, "verify", "--family", "F", "--max-rank", "4", "--max-dim", "100")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["skipped_over_cap"] == 2


def test_output_is_deterministic(capsys, tmp_path):
    args = ["verify", "--family", "AG", "--max-rank", "3", "--format", "json"]
    assert main(args + ["--output", str(tmp_path / "a.json")]) == 0
    assert main(args + ["--output", str(tmp_path / "b.json"), "--threads", "2"]) == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_cache_subcommands(capsys, tmp_path):
    d = str(tmp_path)
    code, out, _ = run(capsys, "cache", "store", "--type", "A", "--rank", "2", "--weight", "1,0", "--cache-dir", d)
    assert code == 0 and json.loads(out)["dim"] == 3
    code, out, _ = run(capsys, "cache", "load", "--type", "A", "--rank", "2", "--weight", "1,0", "--cache-dir", d)
    assert json.loads(out)["hit"] is True
    code, out, _ = run(capsys, "cache", "list", "--cache-dir", d)
    assert out.strip() == "A2__1_0.json"
    code, out, _ = run(capsys, "cache", "clear", "--cache-dir", d)
    code, out, _ = run(capsys, "cache", "list", "--cache-dir", d)
    assert code == 0 and out == ""


def test_cache_env_default(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("PBW_CACHE_DIR", str(tmp_path))
    code, _, _ = run(capsys, "degree", "--type", "B", "--rank", "2", "--weight", "1,0")
    assert code == 0 and (tmp_path / "B2__1_0.json").exists()
    code, out, _ = run(capsys, "degree", "--type", "B", "--rank", "2", "--weight", "1,0")
    assert json.loads(out)["coeffs"] == [1, 3, 1]


def test_cache_without_directory_is_invalid(capsys):
    code, _, _ = run(capsys, "cache", "list")
    assert code == 2
