import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from gpknit.cli import main
from gpknit.reports import AnalysisReport, analyze
from gpknit.cli import load

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def as_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    return doc


def test_analyze_a3(capsys):
    doc = as_json(capsys, "analyze", DATA / "a3.quiver")
    assert [c["period"] for c in doc["classes"]] == [3]
    assert doc["omega_g"] is True


def test_analyze_cluster_tilted(capsys):
    doc = as_json(capsys, "analyze", DATA / "cluster4.quiver")
    assert len(doc["classes"]) == 2 and doc["one_gorenstein"] is True
    assert doc["self_injective"] is False


def test_analyze_hereditary(capsys):
    doc = as_json(capsys, "analyze", DATA / "hereditary.quiver")
    assert doc["classes"] == [] and doc["nonprojectives"] == []


def test_analyze_writes_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "analyze", DATA / "a2.quiver", "-o", out)
    assert code == 0 and text == ""
    assert json.loads(out.read_text())["algebra"]["dimension"] == 4


@pytest.mark.parametrize("name", ["a2", "dual", "cluster4", "cycle3_ab"])
def test_report_round_trip(capsys, name):
    doc = as_json(capsys, "analyze", DATA / f"{name}.quiver")
    back = AnalysisReport.from_json(doc)
    live = analyze(load(DATA / f"{name}.quiver"))
    assert back == live
    assert back.to_json() == doc


def test_singularity_reports(capsys):
    _, out, _ = run(capsys, "report", "singularity", DATA / "a3.quiver")
    assert "D^b(mod k)/[3]" in out and "conditional" not in out
    _, out, _ = run(capsys, "report", "singularity", DATA / "cluster4.quiver")
    assert out.count("D^b(mod k)/[3]") == 2 and "conditional" not in out
    _, out, _ = run(capsys, "report", "singularity", DATA / "hereditary.quiver")
    assert "singularity category trivial" in out and "conditional" not in out
    _, out, _ = run(capsys, "report", "singularity", DATA / "cycle3_ab.quiver")
    assert "conditional on Λ Gorenstein" in out
    doc = as_json(capsys, "report", "singularity", DATA / "a2.quiver", "--format", "json")
    assert [f["shift_period"] for f in doc["singularity"]["factors"]] == [2]


def test_orbit_reports(capsys):
    _, out, _ = run(capsys, "report", "orbits", DATA / "a2.quiver")
    assert "kZ_6/I^2" in out
    _, out, _ = run(capsys, "report", "orbits", DATA / "cluster4.quiver")
    assert out.count("kZ_9/I^2") == 2
    doc = as_json(capsys, "report", "orbits", DATA / "a3.quiver", "--format", "json")
    (block,) = doc["orbit_presentations"]
    assert len(block["dictionary"]) == 9


def test_pairing_reports(capsys):
    doc = as_json(capsys, "report", "pairs", DATA / "a2.quiver", "--format", "json")
    assert sorted(map(tuple, doc["pairs"])) == [("S[aΛ]", "S[bΛ]"), ("S[bΛ]", "S[aΛ]")]
    doc = as_json(capsys, "report", "pairs", DATA / "dual.quiver", "--format", "json")
    assert doc["pairs"] == [["S[xΛ]", "S[xΛ]"]]
    doc = as_json(capsys, "report", "cor44", DATA / "cluster4.quiver", "--format", "json")
    pairs = doc["pairs"]
    assert len(pairs) == 6
    assert sorted(a for a, _ in pairs) == sorted(b for _, b in pairs)


def test_pairing_alias(capsys):
    a = run(capsys, "report", "pairs", DATA / "a3.quiver")[1]
    b = run(capsys, "report", "cor44", DATA / "a3.quiver")[1]
    assert a == b and a.count("τ_B^-1") == 3


def test_export_sub_stable_dot(capsys):
    code, out, _ = run(capsys, "export", DATA / "a2.quiver", "--what", "sub-stable")
    assert code == 0 and out.startswith("digraph")
    assert len(re.findall(r"\[label=", out)) == 6


def test_export_h_an(capsys):
    _, out, _ = run(capsys, "export", "--what", "h-an", "2")
    assert len(re.findall(r"\[label=", out)) == 18
    doc = as_json(capsys, "export", "--what", "h-an", "2", "--format", "json")
    assert len(doc["vertices"]) == 18


def test_export_tn(capsys):
    doc = as_json(capsys, "export", DATA / "dual.quiver", "--what", "tn", "2", "--format", "json")
    assert len(doc["descriptors"]) == 5


def test_export_notes_become_dot_comments(capsys):
    _, out, _ = run(capsys, "export", DATA / "cycle3_ab.quiver", "--what", "sub")
    assert "// sink map into" in out


def test_checks(capsys):
    _, out, _ = run(capsys, "check", "self-injective", DATA / "a2.quiver")
    assert out.strip() == "self-injective: true"
    _, out, _ = run(capsys, "check", "one-gorenstein", DATA / "cycle3_ab.quiver")
    assert out.startswith("one-gorenstein: false") and "aΛ" in out
    _, out, _ = run(capsys, "check", "omega-g", DATA / "cluster4.quiver")
    assert out.strip() == "omega-g: true"


def test_tn_command(capsys):
    _, out, _ = run(capsys, "tn", DATA / "a2.quiver", "3")
    assert out.strip().endswith("18 indecomposable Gorenstein projectives")


def test_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", DATA / "loop_free.quiver")
    assert code == 2 and "infinite-dimensional" in err
    bad = tmp_path / "bad.quiver"
    bad.write_text("vertices: 1\narow x: 1 -> 1\n")
    assert run(capsys, "analyze", bad)[0] == 1
    assert run(capsys, "analyze", tmp_path / "missing.quiver")[0] == 1


def test_oracle_disagreement_exit(capsys, monkeypatch):
    from gpknit import cli
    from gpknit.errors import OracleDisagreement

    def boom(*a, **k):
        raise OracleDisagreement("forced")

    monkeypatch.setattr(cli, "analyze", boom)
    assert run(capsys, "analyze", DATA / "a2.quiver")[0] == 3


def test_seed_is_reproducible(capsys):
    a = run(capsys, "analyze", DATA / "cluster4.quiver", "--seed", "7")[1]
    b = run(capsys, "analyze", DATA / "cluster4.quiver", "--seed", "7")[1]
    assert a == b


def test_console_script_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "gpknit.cli", "check", "self-injective", str(DATA / "hereditary.quiver")],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0 and r.stdout.strip() == "self-injective: false"
