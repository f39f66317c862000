import json
import re
import shutil
import subprocess
import sys

import pytest

from srep import golden
from srep.cli import EXIT_FAIL, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, run


def _ok(argv):
    status, out = run(argv)
    assert status == EXIT_OK, out
    return out


def test_index_example():
    assert _ok(["index", "spC-spR", "--n", "4"]) == "16\n"
    assert json.loads(_ok(["index", "spC-spR", "--n", "4", "--format", "json", "--oracle"]))["oracle_index"] == 16


def test_cosets_with_oracle():
    out = _ok(["cosets", "A4-A1xA2", "--oracle"])
    assert "10 representatives" in out and "oracle: PASS" in out
    data = json.loads(_ok(["cosets", "A4-A1xA2", "--oracle", "--format", "json"]))
    assert data["count"] == 10 and data["oracle"]["ok"]
    assert [r["label"] for r in data["reps"]] == golden.example_a4()["words"]


def test_orbits_markdown_has_six_blocks():
    out = _ok(["orbits", "sl4R-so22", "--format", "markdown"])
    assert out.count("### Theta in") == 6
    assert "| Psi-{e2-e3} | so(0,2) + so(2,0) |" in out


def test_orbits_json_and_latex():
    data = json.loads(_ok(["orbits", "sl4R-so22", "--format", "json"]))
    assert len(data["blocks"]) == 6 and sum(len(b["rows"]) for b in data["blocks"]) == 48
    tex = _ok(["orbits", "sl4R-so22", "--format", "latex"])
    assert tex.count(r"\begin{tabular}") == tex.count(r"\end{tabular}") == 6
    for line in tex.splitlines():
        assert line.count("$") % 2 == 0


def test_elliptic_and_merge():
    data = json.loads(_ok(["orbits", "slR2-slR", "--n", "4", "--elliptic", "--format", "json"]))
    assert data["kind"] == "elliptic" and data["computed_from"] == "(sl(4,C), sl(4,R))"
    merged = json.loads(_ok(["orbits", "sl4R-so22", "--merge-iso", "--format", "json"]))
    plain = json.loads(_ok(["orbits", "sl4R-so22", "--format", "json"]))
    assert len(merged["orbit_types"]) < len(plain["orbit_types"])


def test_hpis_and_recipe():
    out = _ok(["hpis", "su2p2np-sppq", "--n", "5", "--p", "2", "--recipe"])
    assert "(match)" in out
    data = json.loads(_ok(["hpis", "slC-slR", "--n", "6", "--recipe", "--format", "json"]))
    assert data["recipe_matches"] and data["hpis"] == "R^2 + so(2)^3"
    assert _ok(["hpis", "slC-slR", "--n", "6", "--format", "latex"]).startswith("$")


def test_satake_trace():
    out = _ok(["satake", "su2p2np-sppq", "--n", "6", "--p", "2"])
    assert "Case3" in out and "Case5" in out
    data = json.loads(_ok(["satake", "--file", "slC-slR_n5.txt", "--format", "json"]))
    assert data["z_h"] == "R^2 + so(2)^2"


def test_pairs_catalog():
    data = json.loads(_ok(["pairs", "--format", "json"]))
    assert len({p["family_id"] for p in data["pairs"]}) == 51
    assert "sl4R-so22" in data["aliases"]
    assert "aliases:" in _ok(["pairs"])
    one = json.loads(_ok(["pairs", "sl4R-so22", "--format", "json"]))
    assert one["index"] == 6


def test_verify_passes_and_is_stable():
    s1, out1 = run(["verify", "--max-rank", "4"])
    s2, out2 = run(["verify", "--max-rank", "4"])
    assert s1 == EXIT_OK and out1 == out2
    assert "FAIL" not in out1


def test_verify_detects_corrupted_golden(tmp_path, monkeypatch):
    root = tmp_path / "data"
    shutil.copytree(golden.data_dir(), root)
    tab = json.loads((root / "hpis_table.json").read_text())
    tab["blocks"][0]["rows"][0]["h_theta"] = "so(3,1)"
    (root / "hpis_table.json").write_text(json.dumps(tab))
    monkeypatch.setenv(golden.ENV_DIR, str(root))  # restored on teardown
    status, out = run(["--golden-dir", str(root), "verify", "--max-rank", "2"])
    assert status == EXIT_FAIL
    assert re.search(r"^FAIL sl4R-so22:id", out, re.M)


@pytest.mark.parametrize("argv", [
    ["index", "nosuch"], ["pairs", "supq2-supq", "--n", "3", "--p", "2"], ["cosets", "C3-B3"],
    ["satake"], ["frobnicate"], ["index"],
])
def test_usage_errors(argv, capsys):
    status, out = run(argv)
    assert status == EXIT_USAGE and out == ""


def test_error_objects_are_json(capsys):
    run(["index", "nosuch"])
    err = capsys.readouterr().err.strip().splitlines()[-1]
    assert json.loads(err)["error"] == "usage"
    status, _ = run(["satake", "spC-spR", "--n", "3"])
    assert status == EXIT_INTERNAL
    assert json.loads(capsys.readouterr().err.strip())["error"] == "unknown_diagram_classification"


def test_cap_warning(capsys):
    _ok(["index", "spC-spR", "--n", "3", "--oracle", "--cap", "60000"])
    assert "warning" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "srep", "index", "sl4R-so22"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "6\n"
