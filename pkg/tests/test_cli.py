"""Command-line surface: output shapes, exit codes, env overrides."""

import json

import pytest

from isolab.cli import main

PETERSEN_G6 = "IheA@GUAo"


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _run_json(capsys, *argv):
    code, out, err = _run(capsys, *argv, "--json")
    return code, json.loads(out), err


# -- exact --------------------------------------------------------------------


def test_exact_json_petersen(capsys):
    code, doc, _ = _run_json(capsys, "exact", "-g", PETERSEN_G6)
    assert code == 0
    assert doc["schema"] == "isolab/1"
    assert doc["i"] == "1/1"  # rationals are strings
    assert doc["approx"] == 1.0  # approximations are numbers
    assert doc["certified"] is True
    assert doc["graph"]["n"] == 10


def test_exact_text_petersen(capsys):
    code, out, _ = _run(capsys, "exact", "-g", PETERSEN_G6)
    assert code == 0
    assert "i = 1 (= 1/1)" in out
    assert "certified: True" in out


def test_exact_sparsity_quantity(capsys):
    code, doc, _ = _run_json(capsys, "exact", "--corpus", "Durer graph",
                             "--quantity", "sparsity")
    assert code == 0
    assert doc["sigma"] == "1/9"


def test_exact_cheeger_quantity(capsys):
    code, doc, _ = _run_json(capsys, "exact", "--corpus", "Durer graph",
                             "--quantity", "cheeger")
    assert code == 0
    assert doc["h"] == "2/9"


# -- bounds -------------------------------------------------------------------


def test_bounds_text_petersen(capsys):
    code, out, _ = _run(capsys, "bounds", "--corpus", "Petersen graph")
    assert code == 0
    assert "i = 1 = 1/1" in out
    assert "gap-lower" in out and "= i" in out
    assert "partialsum-upper" in out


def test_bounds_json_matches_text(capsys):
    code, doc, _ = _run_json(capsys, "bounds", "--corpus", "Petersen graph")
    assert code == 0
    rows = {r["bound"]: r for r in doc["bounds"]}
    assert rows["gap-lower"]["approx"] == pytest.approx(1.0)
    assert rows["tail-upper"]["approx"] == pytest.approx(2.5)
    assert rows["gap-lower"]["tight"]
    assert doc["i"]["exact"] == "1/1"


def test_bounds_irregular_graph_flags(capsys):
    code, doc, _ = _run_json(capsys, "bounds", "-g", "Ch")  # the path P4
    assert code == 0
    rows = {r["bound"]: r for r in doc["bounds"]}
    assert not rows["tail-upper"]["applicable"]


# -- input handling -----------------------------------------------------------


def test_requires_exactly_one_source(capsys):
    code, _, err = _run(capsys, "exact", "-g", "C~", "--corpus", "Petersen graph")
    assert code == 1
    assert "input error" in err
    code2, _, err2 = _run(capsys, "exact")
    assert code2 == 1


def test_parse_error_envelope(capsys):
    code, doc, _ = _run_json(capsys, "exact", "-g", '"bad')
    assert code == 1
    assert doc["error"]["type"] == "input"
    assert "graph6" in doc["error"]["message"]


def test_unknown_corpus_name(capsys):
    code, _, err = _run(capsys, "exact", "--corpus", "No Such Graph")
    assert code == 1
    assert "no corpus graph named" in err


def test_unknown_command(capsys):
    code, _, err = _run(capsys, "frobnicate")
    assert code == 1


# -- budgets and env overrides --------------------------------------------------


def test_budget_flag_exceeded(capsys):
    code, doc, _ = _run_json(capsys, "exact", "--corpus", "Foster Graph",
                             "--budget", "0.001")
    assert code == 2
    assert doc["error"]["type"] == "budget"


def test_env_budget_fallback(capsys, monkeypatch):
    monkeypatch.setenv("ISOLAB_BUDGET", "0.001")
    code, doc, _ = _run_json(capsys, "exact", "--corpus", "Foster Graph")
    assert code == 2
    assert doc["error"]["type"] == "budget"


def test_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("ISOLAB_JOBS", "0")
    code, _, err = _run(capsys, "exact", "-g", "C~")
    assert code == 1
    assert "--jobs" in err


def test_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("ISOLAB_SEED", "not-a-number")
    # the explicit flag wins, so the bad env value is never read
    code, _, _ = _run(capsys, "split", "--k", "4", "--ell", "4", "--seed", "3")
    assert code == 0


# -- tables ---------------------------------------------------------------------


def test_tables_text_row(capsys):
    code, out, _ = _run(capsys, "tables", "a1", "--rows", "desargues")
    assert code == 0
    assert "Desargues Graph *" in out
    assert "1/1 computed rows fully matched" in out


def test_tables_json_partial_budget(capsys):
    code, doc, _ = _run_json(capsys, "tables", "t2", "--rows", "holt",
                             "--budget", "0.0001")
    assert code == 2
    (row,) = doc["rows"]
    assert row["cells"][-1]["computed"] == "time"


def test_tables_unknown_key(capsys):
    code, _, err = _run(capsys, "tables", "a9")
    assert code == 1
    assert "unknown table" in err


# -- power ----------------------------------------------------------------------


def test_power_closed_petersen(capsys):
    code, doc, _ = _run_json(capsys, "power", "--corpus", "Petersen graph",
                             "--t", "2", "--method", "closed")
    assert code == 0
    assert doc["lower"]["value"] == pytest.approx(5.0)
    assert doc["upper"]["value"] == pytest.approx(5.0)
    assert doc["lower"]["cases"] == ["i", "ii"]


def test_power_closed_wrong_t(capsys):
    code, _, err = _run(capsys, "power", "--corpus", "Petersen graph",
                        "--t", "3", "--method", "closed")
    assert code == 1
    assert "t=2 only" in err


def test_power_poly_petersen(capsys):
    code, doc, _ = _run_json(capsys, "power", "--corpus", "Petersen graph",
                             "--t", "2", "--method", "poly")
    assert code == 0
    assert doc["representable"] is True
    assert doc["poly"] == pytest.approx([-3.0, 1.0, 1.0])
    assert doc["lower"] == pytest.approx(5.0)


# -- drg --------------------------------------------------------------------------


def test_drg_array_route(capsys):
    code, doc, _ = _run_json(capsys, "drg", "--array", "3,2;1,1", "--n", "10")
    assert code == 0
    assert doc["array"] == "{3,2;1,1}"
    assert doc["sigma_lower"] == "1/5"
    assert doc["iso_lower"] == "1/1"
    assert doc["eigenvalues"][0] == pytest.approx(3.0)


def test_drg_graph_route_with_certificates(capsys):
    code, doc, _ = _run_json(capsys, "drg", "--corpus", "Petersen graph",
                             "--certify")
    assert code == 0
    assert doc["drg"] is True
    assert doc["primal"]["value"] == "1/5"
    assert doc["dual"]["psi"] == "1/5"
    assert doc["dual"]["all_positive"] is True
    assert doc["direct"]["status"] == "optimal"


def test_drg_non_drg_graph(capsys):
    code, doc, _ = _run_json(capsys, "drg", "--corpus", "Frucht graph")
    assert code == 0
    assert doc["drg"] is False


# -- family -----------------------------------------------------------------------


def test_family_eval_bare_value(capsys):
    code, out, _ = _run(capsys, "family", "--eval", "hamming", "2", "3")
    assert code == 0
    assert out.strip() == "2"


def test_family_list_marks_formula_only(capsys):
    code, out, _ = _run(capsys, "family", "--list")
    assert code == 0
    assert "[formula only]" in out
    assert "grassmann_4_2" in out


def test_family_verify_exit_codes(capsys):
    code, out, _ = _run(capsys, "family", "--verify", "cycle", "10")
    assert code == 0
    assert "agree" in out
    code2, out2, _ = _run(capsys, "family", "--verify", "grassmann_4_2", "3")
    assert code2 == 2  # skipped for budget reasons
    code3, _, err3 = _run(capsys, "family", "--verify", "grassmann_4_2", "2")
    assert code3 == 1  # domain error


# -- split ------------------------------------------------------------------------


def test_split_sample_mode(capsys):
    code, doc, _ = _run_json(capsys, "split", "--k", "8", "--ell", "8",
                             "--seed", "7")
    assert code == 0
    assert doc["mode"] == "sample"
    assert doc["delta"] == 2
    assert doc["small_set"]["holds"] is True
    assert doc["small_set"]["checked"] == 2516


def test_split_experiment_mode(capsys):
    code, doc, _ = _run_json(capsys, "split", "--k", "6", "--trials", "10",
                             "--seed", "42")
    assert code == 0
    assert doc["mode"] == "exact"
    assert doc["fraction_equal"] == pytest.approx(0.9)
    assert len(doc["records"]) == 10
    assert doc["records"][0]["i"] == "1/1"


def test_split_auto_heuristic_downgrade(capsys):
    code, doc, _ = _run_json(capsys, "split", "--k", "20", "--trials", "2",
                             "--seed", "1")
    assert code == 2
    assert doc["mode"] == "heuristic"
