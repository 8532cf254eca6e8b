"""Command-line interface: output documents and exit codes."""

import json

import pytest

from torusknot.cli import main
from torusknot.diagram import closure_diagram, export_pd
from torusknot.braid import torus_braid_word


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_alexander_text_and_json(capsys):
    code, out, _ = run(capsys, "alexander", "4", "5")
    assert code == 0
    assert out.strip() == "t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6"
    code, document, _ = run_json(capsys, "alexander", "4", "5")
    assert code == 0
    assert document["polynomial"] == "t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6"
    assert document["coefficients"]["-6"] == 1
    assert document["coefficients"]["0"] == -1


def test_alexander_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "alexander", "4", "6")
    assert code == 2
    assert out == ""
    assert "error:" in err and "gcd" in err


def test_width_json_document_is_exact(capsys):
    code, document, _ = run_json(capsys, "width", "4", "5")
    assert code == 0
    assert document == {"delta_max": 6, "delta_min": 4, "width": 3}


def test_hfk_table_layout(capsys):
    code, out, _ = run(capsys, "hfk", "2", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["s", "m", "rank"]
    assert lines[1].split() == ["1", "0", "1"]
    assert lines[-1].startswith("width 1")


def test_scan_clean_and_json(capsys):
    code, out, _ = run(capsys, "scan", "--bound", "40")
    assert code == 0
    assert "0 violations" in out
    code, document, _ = run_json(capsys, "scan", "--bound", "40", "--jobs", "2")
    assert code == 0
    assert document["violations"] == []
    assert document["pairs_checked"] > 0


def test_braid_eq_exit_codes(capsys):
    code, out, _ = run(capsys, "braid-eq", "--strands", "3", "121", "212")
    assert code == 0 and out.strip() == "equal"
    code, out, _ = run(capsys, "braid-eq", "--strands", "3", "12", "21")
    assert code == 1 and out.strip() == "not equal"
    code, out, _ = run(
        capsys, "braid-eq", "--strands", "4", "--cyclic", "123", "231"
    )
    assert code == 0 and "cyclically equal" in out
    code, _, err = run(capsys, "braid-eq", "--strands", "3", "1x", "11")
    assert code == 2 and "error:" in err


def test_verify_lemmas_cli(capsys):
    code, document, _ = run_json(capsys, "verify-lemmas", "--n-max", "1")
    assert code == 0
    assert len(document) == 11
    assert all(entry["passed"] for entry in document)


def test_turaev_genus_sources(capsys):
    code, document, _ = run_json(capsys, "turaev-genus", "--tabulated", "6", "6")
    assert code == 0
    assert document == {"crossings": 30, "s_A": 6, "s_B": 14, "turaev_genus": 6}
    code, document, _ = run_json(capsys, "turaev-genus", "--strands", "2", "111")
    assert code == 0
    assert document["turaev_genus"] == 0


def test_dalt_from_word_and_pd(capsys, tmp_path):
    code, document, _ = run_json(capsys, "dalt", "--torus", "4", "4")
    assert code == 0
    assert document["minimum_changes"] == 4
    assert document["witness"] == [1, 4, 7, 10]

    pd_file = tmp_path / "d.json"
    pd_file.write_text(export_pd(closure_diagram(torus_braid_word(4, 4))))
    code, document, _ = run_json(capsys, "dalt", "--pd", str(pd_file))
    assert code == 0
    assert document["minimum_changes"] == 4


def test_dalt_requires_a_source(capsys):
    code, _, err = run(capsys, "dalt")
    assert code == 2
    assert "diagram source" in err


def test_dalt_missing_pd_file(capsys):
    code, _, err = run(capsys, "dalt", "--pd", "/no/such/file.json")
    assert code == 2
    assert "error:" in err


def test_states_assignments(capsys):
    code, document, _ = run_json(
        capsys, "states", "--torus", "2", "3", "--assignment", "all-A"
    )
    assert code == 0
    assert document == {"assignment": "AAA", "components": 2}
    code, document, _ = run_json(
        capsys, "states", "--torus", "2", "3", "--assignment", "abb"
    )
    assert code == 0
    assert document["assignment"] == "ABB"
    code, _, err = run(
        capsys, "states", "--torus", "2", "3", "--assignment", "AAAA"
    )
    assert code == 2 and "error:" in err


def test_bounds_cli(capsys):
    code, document, _ = run_json(capsys, "bounds", "4", "5")
    assert code == 0
    assert document["turaev_genus"]["lower"] == 2
    assert document["turaev_genus"]["upper"] == 2
    code, out, _ = run(capsys, "bounds", "6", "7")
    assert code == 0
    assert "turaev genus: [6, 6]" in out
    assert "attained by the generated diagram" in out


def test_verify_paper_single_check(capsys):
    code, document, _ = run_json(
        capsys, "verify-paper", "--only", "golden-alexander"
    )
    assert code == 0
    assert len(document) == 1
    assert document[0]["name"] == "golden-alexander"
    assert document[0]["passed"] is True


def test_verify_paper_text_summary(capsys):
    code, out, _ = run(
        capsys,
        "verify-paper",
        "--only",
        "golden-alexander",
        "--only",
        "golden-hfk",
    )
    assert code == 0
    assert "PASS golden-alexander" in out
    assert "2/2 checks passed" in out


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["alexander", "4"])
    assert info.value.code == 2


def test_compact_json_single_line(capsys):
    code, out, _ = run(capsys, "width", "4", "5", "--json", "--compact")
    assert code == 0
    assert out.count("\n") == 1
    assert json.loads(out) == {"delta_max": 6, "delta_min": 4, "width": 3}
