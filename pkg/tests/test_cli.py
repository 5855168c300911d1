"""CLI behavior: exit codes, report schema, determinism."""

import csv
import io
import json
import subprocess
import sys

from hopfcheck import __version__
from hopfcheck.checks import ReportDocument
from hopfcheck.cli import emit, main

REPORT_KEYS = {"law", "instance", "status", "samples", "tolerance",
               "max_residual", "seed", "duration_ms", "expected"}
DOC_KEYS = {"version", "config", "reports", "overall", "duration_ms"}


def run_cli(*argv):
    return main(list(argv))


def run_cli_json(tmp_path, *argv, name="out.json"):
    path = tmp_path / name
    code = run_cli(*argv, "--format", "json", "--output", str(path))
    return code, json.loads(path.read_text())


# --- exit codes -----------------------------------------------------------------

def test_expected_ladder_failures_exit_zero(tmp_path):
    code, doc = run_cli_json(
        tmp_path, "laws", "--level", "3", "--mode", "exact", "--samples", "30")
    assert code == 0
    assert doc["overall"] == "pass"
    by_law = {r["law"]: r for r in doc["reports"]}
    assert by_law["associativity"]["status"] == "fails"
    assert by_law["associativity"]["expected"] is True
    assert by_law["alternativity"]["status"] == "holds-exact"


def test_unknown_subcommand_exits_2():
    assert run_cli("no-such-suite") == 2


def test_unknown_flag_exits_2():
    assert run_cli("laws", "--level", "1", "--frobnicate") == 2


def test_bad_sample_count_exits_2():
    assert run_cli("laws", "--level", "1", "--samples", "0") == 2


def test_unwritable_output_exits_2(tmp_path):
    target = tmp_path / "nope" / "deeper" / "out.json"
    code = run_cli("laws", "--level", "0", "--samples", "5",
                   "--output", str(target))
    assert code == 2


def test_help_exits_zero():
    assert run_cli("--help") == 0


# --- report schema ----------------------------------------------------------------

def test_json_schema_fields(tmp_path):
    code, doc = run_cli_json(
        tmp_path, "spheroid", "--instance", "s1", "--samples", "40")
    assert code == 0
    assert set(doc.keys()) == DOC_KEYS
    assert doc["version"] == __version__
    for r in doc["reports"]:
        assert REPORT_KEYS <= set(r.keys()) <= REPORT_KEYS | {"witness"}
        assert r["status"] in ("holds-exact", "holds-sampled", "fails")
        if r["status"] == "fails":
            assert "witness" in r


def test_failing_law_serializes_witness_coefficients(tmp_path):
    code, doc = run_cli_json(
        tmp_path, "laws", "--level", "1", "--samples", "20")
    assert code == 0
    realness = next(r for r in doc["reports"] if r["law"] == "realness")
    assert realness["status"] == "fails"
    witness = realness["witness"]
    assert isinstance(witness["inputs"], list)
    assert all(isinstance(c, (int, float, str)) for c in witness["inputs"][0])


def test_zero_divisor_witness_round_trip(tmp_path):
    code, doc = run_cli_json(
        tmp_path, "zerodiv", "--level", "4", "--samples", "1")
    assert code == 0
    (report,) = doc["reports"]
    assert report["status"] == "fails"
    assert report["expected"] is True
    a, b = report["witness"]["inputs"]
    assert len(a) == 16 and len(b) == 16


def test_empty_report_list_is_valid_json():
    doc = ReportDocument(version=__version__, config={}, reports=[])
    doc.finalize()
    parsed = json.loads(emit(doc, "json").decode())
    assert parsed["reports"] == []
    assert parsed["overall"] == "pass"


def test_csv_has_header_plus_one_row_per_report(tmp_path):
    path = tmp_path / "out.csv"
    code = run_cli("hspace", "--instance", "s1", "--samples", "30",
                   "--format", "csv", "--output", str(path))
    assert code == 0
    rows = list(csv.reader(io.StringIO(path.read_text())))
    assert rows[0][0] == "law"
    assert len(rows) == 1 + 6  # six H-space laws


def test_text_format_mentions_overall(capsys):
    code = run_cli("spheroid", "--instance", "s0", "--samples", "10")
    assert code == 0
    out = capsys.readouterr().out
    assert "overall=pass" in out


# --- determinism --------------------------------------------------------------------

def _strip_durations(doc):
    doc = json.loads(json.dumps(doc))
    doc["duration_ms"] = None
    doc["config"]["output"] = None
    for r in doc["reports"]:
        r["duration_ms"] = None
    return doc


def test_reports_identical_across_worker_counts(tmp_path):
    _, one = run_cli_json(
        tmp_path, "hspace", "--instance", "s3", "--mode", "float",
        "--samples", "400", "--seed", "11", "--workers", "1", name="w1.json")
    _, four = run_cli_json(
        tmp_path, "hspace", "--instance", "s3", "--mode", "float",
        "--samples", "400", "--seed", "11", "--workers", "4", name="w4.json")
    a, b = _strip_durations(one), _strip_durations(four)
    a["config"]["workers"] = b["config"]["workers"] = None
    assert a == b


def test_same_seed_same_bytes_modulo_duration(tmp_path):
    _, first = run_cli_json(
        tmp_path, "imaginaroid", "--instance", "s0", "--samples", "60",
        "--seed", "5", name="a.json")
    _, second = run_cli_json(
        tmp_path, "imaginaroid", "--instance", "s0", "--samples", "60",
        "--seed", "5", name="b.json")
    assert _strip_durations(first) == _strip_durations(second)


def test_env_seed_overrides_flag(tmp_path, monkeypatch):
    monkeypatch.setenv("HOPFCHECK_SEED", "99")
    _, via_env = run_cli_json(
        tmp_path, "spheroid", "--instance", "s1", "--samples", "50",
        "--seed", "3", name="env.json")
    monkeypatch.delenv("HOPFCHECK_SEED")
    _, direct = run_cli_json(
        tmp_path, "spheroid", "--instance", "s1", "--samples", "50",
        "--seed", "99", name="direct.json")
    assert _strip_durations(via_env) == _strip_durations(direct)
    assert via_env["config"]["seed"] == 99


def test_invalid_env_seed_exits_2(monkeypatch):
    monkeypatch.setenv("HOPFCHECK_SEED", "not-a-number")
    assert run_cli("laws", "--level", "0", "--samples", "5") == 2


# --- console entry point --------------------------------------------------------------

def test_module_invocation_matches_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hopfcheck.cli", "laws", "--level", "1",
         "--samples", "10", "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["overall"] == "pass"


def test_fiber_subcommand_exact(tmp_path):
    code, doc = run_cli_json(
        tmp_path, "fiber", "--instance", "quaternionic", "--mode", "exact",
        "--samples", "100")
    assert code == 0
    laws = {r["law"] for r in doc["reports"]}
    assert "fiber-membership" in laws and "associativity" in laws
    assert all(r["status"] != "holds-sampled" for r in doc["reports"])


def test_fibration_subcommand_all_instances(tmp_path):
    code, doc = run_cli_json(
        tmp_path, "fibration", "--instance", "all", "--samples", "60")
    assert code == 0
    prefixes = {r["instance"].split(":")[0] for r in doc["reports"]}
    assert prefixes == {"real", "complex", "quaternionic"}
