"""Command line interface: verbs, flags, JSON output, exit codes."""

import json
import subprocess
import sys

import pytest

from graded_leibniz.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code in (0, 1), err
    return code, json.loads(out)


def test_check_null_filiform(capsys):
    code, doc = run_json(capsys, "check", "--family", "nf", "--dim", "5")
    assert code == 0
    assert doc == {"leibniz": True, "null_filiform": True, "nilpotency_index": 6}


def test_check_other_families(capsys):
    _, doc = run_json(capsys, "check", "--family", "f1", "--dim", "5")
    assert doc == {"leibniz": True, "null_filiform": False, "nilpotency_index": 5}
    _, doc = run_json(capsys, "check", "--family", "lie-q", "--dim", "6", "--field", "F5")
    assert doc["leibniz"] is True


def test_check_failure_exits_one(capsys, tmp_path):
    bad = {
        "dim": 3,
        "field": {"kind": "Q"},
        "sc": [
            {"i": 1, "j": 1, "terms": [{"k": 2, "c": "1/1"}]},
            {"i": 1, "j": 2, "terms": [{"k": 3, "c": "1/1"}]},
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, doc = run_json(capsys, "check", "--input", str(path))
    assert code == 1
    assert doc["leibniz"] is False


def test_props_fields(capsys):
    _, doc = run_json(capsys, "props", "--family", "f2", "--dim", "5")
    assert doc["lcs_dims"] == [5, 3, 2, 1, 0]
    assert doc["antisymmetric"] is False
    assert doc["nilpotent"] is True
    assert doc["filiform"] is True
    assert len(doc["center"]) == 2  # e_4 and e_5 both central in f2
    assert doc["algebra"] == {"family": "f2", "dim": 5}


def test_aut_count_brute_force(capsys):
    code, doc = run_json(
        capsys, "aut-count", "--family", "nf", "--dim", "3", "--field", "F5", "--brute-force"
    )
    assert code == 0
    assert doc["check"] == "aut-bruteforce"
    assert doc["count"] == 100
    assert doc["matches_family"] is True
    assert doc["algebra"] == {"family": "nf", "dim": 3}
    assert doc["field"] == {"kind": "Fp", "p": 5}
    assert isinstance(doc["elapsed_ms"], int)


def test_aut_count_formula(capsys):
    code, doc = run_json(capsys, "aut-count", "--family", "f1", "--dim", "5", "--field", "Fp:3")
    assert code == 0
    assert doc["check"] == "aut-family-count"
    assert doc["count"] == 4 * 3**4
    assert doc["matches_family"] is None


def test_aut_count_formula_needs_known_family(capsys):
    code, out, err = run_cli(capsys, "aut-count", "--family", "f2", "--dim", "4", "--field", "F3")
    assert code == 2 and "formula" in err


def test_gradings_with_group_flag(capsys):
    code, docs = run_json(capsys, "gradings", "--family", "f1", "--dim", "4", "--group", "Z2")
    assert code == 0
    split = {"group": {"rank": 0, "torsion": [2]}, "degrees": [[0], [1], [1], [1]]}
    assert split in docs


def test_gradings_default_menu(capsys):
    code, docs = run_json(capsys, "gradings", "--family", "nf", "--dim", "5")
    assert code == 0 and len(docs) == 5


def test_gradings_deterministic(capsys):
    _, first = run_json(capsys, "gradings", "--family", "f2", "--dim", "5")
    _, second = run_json(capsys, "gradings", "--family", "f2", "--dim", "5")
    assert first == second


def test_normalizer_verb(capsys):
    code, doc = run_json(capsys, "normalizer", "--family", "f1", "--dim", "3", "--field", "F5")
    assert code == 0
    assert doc["check"] == "normalizer"
    assert doc["count"] == 16 and doc["torus_size"] == 16
    assert doc["matches_family"] is True
    assert "note" in doc


def test_export_import_round_trip(capsys, tmp_path):
    _, doc = run_json(capsys, "export", "--family", "lie-l", "--dim", "4")
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(doc))
    code, back = run_json(capsys, "check", "--input", str(path))
    assert code == 0 and back["leibniz"] is True


def test_verify_paper_small(capsys):
    code, doc = run_json(capsys, "verify-paper", "--max-dim", "3", "--threads", "2")
    assert code == 0
    assert doc["failed"] == 0
    assert doc["total"] == doc["passed"] == len(doc["claims"])
    first = doc["claims"][0]
    assert {"criterion", "claim", "family", "dim", "field", "pass", "detail", "elapsed_ms"} <= set(first)


def test_json_indent_flag(capsys):
    code, out, _ = run_cli(capsys, "--json-indent", "2", "check", "--family", "nf", "--dim", "3")
    assert code == 0 and out.startswith("{\n  ")
    json.loads(out)


def test_usage_errors_exit_two(capsys):
    assert run_cli(capsys, "check", "--dim", "3")[0] == 2
    assert run_cli(capsys, "check", "--family", "nf")[0] == 2
    assert run_cli(capsys, "check", "--family", "nf", "--dim", "1")[0] == 2
    assert run_cli(capsys, "check", "--family", "lie-q", "--dim", "5")[0] == 2
    assert run_cli(capsys, "check", "--family", "nf", "--dim", "3", "--field", "F4")[0] == 2
    assert run_cli(capsys, "check", "--family", "nf", "--dim", "3", "--field", "huh")[0] == 2
    assert run_cli(capsys, "gradings", "--family", "lie-l", "--dim", "4")[0] == 2
    assert run_cli(capsys, "gradings", "--family", "nf", "--dim", "4", "--group", "what")[0] == 2
    assert run_cli(capsys, "normalizer", "--family", "nf", "--dim", "4")[0] == 2
    assert run_cli(capsys, "check", "--input", "/nonexistent/path.json")[0] == 2


def test_input_excludes_family(capsys, tmp_path):
    path = tmp_path / "a.json"
    path.write_text("{}")
    code, _, err = run_cli(capsys, "check", "--input", str(path), "--family", "nf", "--dim", "3")
    assert code == 2 and "replaces" in err


def test_malformed_input_document_exits_two(capsys, tmp_path):
    # wrong sc shape (dict instead of entry list) must not escape as a traceback
    path = tmp_path / "mangled.json"
    path.write_text(json.dumps({"dim": 2, "field": {"kind": "Q"}, "sc": {"1,1": {"1": "1"}}}))
    code, _, err = run_cli(capsys, "check", "--input", str(path))
    assert code == 2 and "malformed" in err
    path.write_text(json.dumps({"dim": 2, "sc": []}))
    code, _, err = run_cli(capsys, "check", "--input", str(path))
    assert code == 2 and "malformed" in err


def test_budget_flag_converts_to_search_budget(capsys):
    code, _, err = run_cli(
        capsys, "aut-count", "--family", "nf", "--dim", "4", "--field", "F5",
        "--brute-force", "--budget-ms", "1",
    )
    assert code == 2 and "budget" in err


def test_argparse_usage_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "graded_leibniz.cli", "no-such-verb"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_module_invocation_matches_spec_example():
    proc = subprocess.run(
        [sys.executable, "-m", "graded_leibniz.cli", "check", "--family", "nf", "--dim", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {
        "leibniz": True,
        "null_filiform": True,
        "nilpotency_index": 6,
    }
    assert proc.stdout.strip() == (
        '{"leibniz": true, "null_filiform": true, "nilpotency_index": 6}'
    )


def test_threads_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("GRADED_LEIBNIZ_THREADS", "2")
    code, doc = run_json(capsys, "verify-paper", "--max-dim", "2")
    assert code == 0 and doc["failed"] == 0
