"""Reproduction of the published bound tables and their rendering."""

from fractions import Fraction

import pytest

from isolab.exact import SearchBudget
from isolab.tables import (
    CELL_TOL,
    T2_BOLD_ARTIFACTS,
    TABLE_KEYS,
    TIME,
    available_rows,
    compute_table,
    render_table,
    table_rows,
)


def test_table_keys_and_aliases():
    assert TABLE_KEYS == ("t2", "t3", "t4", "drg")
    # the published table numbers are accepted as aliases
    assert compute_table("a1", names=["no-such-row"]).key == "t2"
    assert compute_table("A4", names=["no-such-row"]).key == "drg"
    with pytest.raises(KeyError, match="unknown table"):
        table_rows("t9")


def test_row_inventory():
    assert len(available_rows("t2")) >= 25
    assert all(r.corpus for r in available_rows("t2"))
    assert len(table_rows("t2")) > len(available_rows("t2"))


def test_cell_tolerance_is_pinned():
    assert CELL_TOL == pytest.approx(0.01, abs=1e-6)


def test_t2_desargues_row():
    rep = compute_table("t2", names=["desargues"])
    (row,) = rep.rows
    assert row.status == "ok"
    assert row.bold
    assert row.matched
    assert row.exact == Fraction(3)
    assert [c.expected for c in row.cells] == [3.0, 6.0, 3.0]
    assert all(c.match for c in row.cells)


def test_t2_rounding_artifact_note():
    rep = compute_table("t2", names=["coxeter graph"])
    row = next(r for r in rep.rows if r.name == "Coxeter Graph")
    assert row.exact == Fraction(23, 7)
    exact_cell = row.cells[-1]
    assert exact_cell.match
    assert "after rounding" in exact_cell.note
    assert "Coxeter Graph" in T2_BOLD_ARTIFACTS


def test_t2_skips_rows_outside_corpus():
    rep = compute_table("t2", names=["brinkmann"])
    (row,) = rep.rows
    assert row.status == "skipped"
    assert row.reason == "not in the bundled corpus"
    assert rep.computed_rows == []


def test_t2_budget_exhaustion_prints_time():
    rep = compute_table("t2", names=["holt"],
                        budget=SearchBudget(max_n=36, max_seconds=1e-4))
    (row,) = rep.rows
    exact_cell = row.cells[-1]
    assert exact_cell.computed == TIME
    assert not exact_cell.match
    assert not row.matched


def test_drg_heawood_row():
    rep = compute_table("drg", names=["heawood"])
    (row,) = rep.rows
    assert [c.expected for c in row.cells] == [0.79, 0.78, 1.0]
    assert all(c.match for c in row.cells)
    assert row.exact == Fraction(1)


def test_t3_wells_row():
    rep = compute_table("t3", names=["wells"])
    (row,) = rep.rows
    assert [c.expected for c in row.cells] == [15.0, 16.0, 15.0]
    assert all(c.match for c in row.cells)
    assert row.bold


def test_render_table_layout():
    rep = compute_table("t2", names=["desargues", "coxeter", "brinkmann"])
    text = render_table(rep)
    lines = text.splitlines()
    assert lines[0] == rep.title
    assert lines[1].startswith("note:")
    assert any(line.startswith("Desargues Graph *") for line in lines)
    assert any("(skipped) Brinkmann graph: not in the bundled corpus" in line
               for line in lines)
    assert "ok" in text
    hidden = render_table(rep, show_skipped=False)
    assert "Brinkmann" not in hidden


def test_names_filter_is_substring_match():
    rep = compute_table("t2", names=["coxeter"])
    got = sorted(r.name for r in rep.rows)
    assert got == ["Coxeter Graph", "Tutte-Coxeter graph"]
