"""Reproduction of the bundled comparison tables.

Four reference tables ship with the package: the closed quadratic bounds
on i(G^2) ("t2"), the LP bounds on i(G^3) and i(G^4) ("t3", "t4"), and
the eigenvalue/distance-count lower bounds for distance-regular graphs
("drg").  Every row stores the published reference cells verbatim,
including 'time' where the original run hit its time limit.  The engine
recomputes whatever the budget allows and marks per-cell agreement at the
printed precision (within 0.01).

Rows whose graph is not bundled are skipped with a reason; rows that are
only known through an intersection array still compute the two
array-derived columns of the "drg" table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import corpus
from .drg import IntersectionArray, array_eigenvalues, detect_drg, drg_iso_lower
from .exact import BudgetError, SearchBudget, isoperimetric_exact
from .graphs import graph_power
from .power_bounds import (
    closed_lower_t2,
    closed_upper_t2,
    lp_lower_sweep,
    lp_upper_sweep,
)
from .spectra import laplacian_spectrum

__all__ = [
    "TIME",
    "CELL_TOL",
    "TABLE_BUDGET",
    "TABLE_KEYS",
    "TableRow",
    "Cell",
    "RowResult",
    "TableReport",
    "table_rows",
    "available_rows",
    "compute_table",
    "render_table",
]

TIME = "time"
CELL_TOL = 0.01 + 1e-9

# Exact cells run under this unless the caller overrides it: large enough
# for the n=36 searches the reference tables include, small enough that
# every cell printed as 'time' stays skipped.
TABLE_BUDGET = SearchBudget(max_n=36, max_seconds=900.0)

# LP sweep columns are only attempted below this order; the published
# tables hit their time limit on everything larger.
BOUND_MAX_N = 64


@dataclass(frozen=True)
class TableRow:
    """One published row: reference cells plus how to rebuild the graph."""

    name: str
    expected: tuple
    corpus: str | None = None
    drg: bool = False
    bold: bool = False
    cases: tuple = ()
    array: str | None = None


@dataclass
class Cell:
    column: str
    computed: object        # float, TIME, or None when not computable
    expected: object
    match: bool
    note: str = ""


@dataclass
class RowResult:
    name: str
    status: str             # "ok" | "skipped"
    reason: str = ""
    cells: list = field(default_factory=list)
    bold: bool = False
    cases: tuple = ()
    exact: Fraction | None = None   # exact value behind the last column

    @property
    def matched(self):
        return self.status == "ok" and all(c.match for c in self.cells)


@dataclass
class TableReport:
    key: str
    title: str
    columns: tuple
    rows: list
    note: str = ""

    @property
    def computed_rows(self):
        return [r for r in self.rows if r.status == "ok"]


# The published exact column of the t=2 table went through Python's round()
# before printing, so non-integer values appear as whole numbers under
# round-half-to-even: 5/2 prints as 2.0, 23/2 as 12.0, 8/3 as 3.0.  Cell
# agreement for that column therefore means "rounds to the printed integer";
# the recomputed exact value is reported alongside.
T2_EXACT_NOTE = (
    "published i(G^2) values are rounded to whole numbers "
    "(round-half-to-even); computed cells show the exact value"
)

# Two rows are printed bold (tight) only because of that rounding: the true
# values are 23/7 and 10/3, strictly above the printed 3.0 bound.
T2_BOLD_ARTIFACTS = ("Coxeter Graph", "McGee graph")

# --- t=2 closed bounds; columns: lower, upper, i(G^2) ---------------------

_T2_ROWS = (
    TableRow("Bidiakis cube", (1.75, 6.0, 3.0), "Bidiakis cube", cases=("i",)),
    TableRow("Blanusa First Snark Graph", (1.98, 6.0, 2.0),
             "Blanusa First Snark Graph", cases=("i",)),
    TableRow("Blanusa Second Snark Graph", (1.86, 6.12, 2.0),
             "Blanusa Second Snark Graph", cases=("i",)),
    TableRow("Brinkmann graph", (7.0, 10.31, 8.0), None, cases=("i",)),
    TableRow("Coxeter Graph", (3.0, 6.0, 3.0), "Coxeter Graph",
             drg=True, bold=True, cases=("i",)),
    TableRow("Desargues Graph", (3.0, 6.0, 3.0), "Desargues Graph",
             drg=True, bold=True, cases=("i", "ii", "iii")),
    TableRow("Dodecahedron", (2.38, 6.0, 3.0), "Dodecahedron",
             drg=True, cases=("i",)),
    TableRow("Double star snark", (1.44, 6.12, 2.0), None, cases=("i",)),
    TableRow("Durer graph", (2.0, 6.0, 3.0), "Durer graph",
             cases=("i", "iii")),
    TableRow("Dyck graph", (2.38, 6.0, 2.0), "Dyck graph", cases=("i",)),
    TableRow("F26A Graph", (2.81, 6.07, 3.0), "F26A Graph", cases=("i",)),
    TableRow("Flower Snark", (2.83, 6.12, 3.0), "Flower Snark", cases=("i",)),
    TableRow("Folkman Graph", (2.03, 10.0, 4.0), "Folkman Graph",
             cases=("i",)),
    TableRow("Franklin graph", (2.13, 6.0, 3.0), "Franklin graph",
             cases=("i",)),
    TableRow("Frucht graph", (1.14, 6.12, 3.0), "Frucht graph", cases=("i",)),
    TableRow("Heawood graph", (3.0, 5.71, 3.0), "Heawood graph",
             drg=True, bold=True, cases=("ii", "iii")),
    TableRow("Hexahedron", (3.0, 4.0, 3.0), "Hexahedron",
             drg=True, bold=True, cases=("i", "ii", "iii")),
    TableRow("Hoffman Graph", (3.0, 10.0, 4.0), "Hoffman Graph",
             cases=("i",)),
    TableRow("Holt graph", (6.31, 10.13, 7.0), "Holt graph", cases=("i",)),
    TableRow("Icosahedron", (5.0, 6.0, 5.0), "Icosahedron",
             drg=True, bold=True, cases=("i", "ii")),
    TableRow("Klein 7-regular Graph", (10.5, 12.0, 11.0),
             "Klein 7-regular Graph", drg=True, cases=("i", "ii")),
    TableRow("Markstroem Graph", (0.96, 6.10, 2.0), None, cases=("i",)),
    TableRow("McGee graph", (3.0, 6.12, 3.0), "McGee graph",
             bold=True, cases=("i",)),
    TableRow("Moebius-Kantor Graph", (3.0, 6.0, 3.0), "Moebius-Kantor Graph",
             bold=True, cases=("ii", "iii")),
    TableRow("Nauru Graph", (3.0, 6.0, 3.0), "Nauru Graph",
             bold=True, cases=("i", "ii", "iii")),
    TableRow("Pappus Graph", (3.0, 6.0, 3.0), "Pappus Graph",
             drg=True, bold=True, cases=("ii", "iii")),
    TableRow("Robertson Graph", (7.5, 10.0, 8.0), None, cases=("i", "ii")),
    TableRow("Sylvester Graph", (12.0, 15.0, 12.0), "Sylvester Graph",
             drg=True, bold=True, cases=("i", "ii")),
    TableRow("Tietze Graph", (2.04, 6.0, 4.0), "Tietze Graph",
             cases=("iii",)),
    TableRow("Tricorn Graph", (2.5, 6.11, 3.0), None, cases=("ii", "iii")),
    TableRow("Tutte-Coxeter graph", (3.0, 6.0, 3.0), "Tutte-Coxeter graph",
             drg=True, bold=True, cases=("i", "ii", "iii")),
    TableRow("Twinplex Graph", (4.0, 6.0, 4.0), None,
             bold=True, cases=("i", "ii")),
    TableRow("Wells graph", (11.38, 14.0, 12.0), "Wells graph",
             drg=True, cases=("i",)),
)

# --- t=3 LP bounds; columns: lower, upper, i(G^3) --------------------------

_T3_ROWS = (
    TableRow("Balaban 10-cage", (TIME, TIME, TIME), None),
    TableRow("Blanusa First Snark Graph", (2.92, 13.0, 6.33),
             "Blanusa First Snark Graph"),
    TableRow("Blanusa Second Snark Graph", (2.77, 13.02, 6.44),
             "Blanusa Second Snark Graph"),
    TableRow("Bucky Ball", (TIME, TIME, TIME), None),
    TableRow("Conway-Smith graph for 3S7", (TIME, TIME, TIME), None,
             drg=True),
    TableRow("Coxeter Graph", (10.0, 12.71, 10.0), "Coxeter Graph",
             drg=True, bold=True),
    TableRow("Desargues Graph", (6.5, 9.0, 6.6), "Desargues Graph",
             drg=True),
    TableRow("Dodecahedron", (6.38, 9.0, 6.6), "Dodecahedron", drg=True),
    TableRow("Double star snark", (3.44, 13.01, 5.67), None),
    TableRow("Durer graph", (3.38, 9.0, 5.5), "Durer graph"),
    TableRow("Dyck graph", (5.38, 15.0, 7.0), "Dyck graph"),
    TableRow("Ellingham-Horton 54-graph", (TIME, TIME, TIME), None),
    TableRow("Ellingham-Horton 78-graph", (TIME, TIME, TIME), None),
    TableRow("F26A Graph", (6.17, 15.0, 8.0), "F26A Graph"),
    TableRow("Flower Snark", (4.29, 12.93, 8.0), "Flower Snark"),
    TableRow("Folkman Graph", (6.25, 13.0, 8.8), "Folkman Graph"),
    TableRow("Foster Graph", (TIME, TIME, TIME), "Foster Graph", drg=True),
    TableRow("Foster graph for 3.Sym(6) graph", (21.0, TIME, TIME), None,
             drg=True),
    TableRow("Frucht graph", (3.04, 12.83, 5.67), "Frucht graph"),
    TableRow("Gray graph", (TIME, TIME, TIME), None),
    TableRow("Harborth Graph", (TIME, TIME, TIME), None),
    TableRow("Harries Graph", (TIME, TIME, TIME), None),
    TableRow("Harries-Wong graph", (TIME, TIME, TIME), None),
    TableRow("Hoffman Graph", (6.0, 12.0, 7.5), "Hoffman Graph"),
    TableRow("Horton Graph", (TIME, TIME, TIME), None),
    TableRow("Klein 3-regular Graph", (TIME, TIME, TIME), None),
    TableRow("Markstroem Graph", (1.78, 13.03, 4.33), None),
    TableRow("McGee graph", (10.0, 12.0, 10.0), "McGee graph", bold=True),
    TableRow("Meredith Graph", (TIME, TIME, TIME), None),
    TableRow("Moebius-Kantor Graph", (6.21, 9.0, 7.0),
             "Moebius-Kantor Graph"),
    TableRow("Nauru Graph", (6.5, 15.0, 8.67), "Nauru Graph"),
    TableRow("Pappus Graph", (7.5, 9.0, 7.67), "Pappus Graph", drg=True),
    TableRow("Szekeres Snark Graph", (TIME, TIME, TIME), None),
    TableRow("Tutte-Coxeter graph", (10.0, 15.0, 10.2), "Tutte-Coxeter graph",
             drg=True),
    TableRow("Wells graph", (15.0, 16.0, 15.0), "Wells graph",
             drg=True, bold=True),
)

# --- t=4 LP bounds; columns: lower, upper, i(G^4) --------------------------

_T4_ROWS = (
    TableRow("Balaban 10-cage", (TIME, TIME, TIME), None),
    TableRow("Bucky Ball", (TIME, TIME, TIME), None),
    TableRow("Desargues Graph", (9.0, 10.0, 9.0), "Desargues Graph",
             drg=True, bold=True),
    TableRow("Dodecahedron", (9.0, 10.0, 9.0), "Dodecahedron",
             drg=True, bold=True),
    TableRow("Dyck graph", (9.0, 17.0, 12.0), "Dyck graph"),
    TableRow("Ellingham-Horton 54-graph", (TIME, TIME, TIME), None),
    TableRow("Ellingham-Horton 78-graph", (TIME, TIME, TIME), None),
    TableRow("F26A Graph", (9.0, 15.38, 12.0), "F26A Graph"),
    TableRow("Foster Graph", (TIME, TIME, TIME), "Foster Graph", drg=True),
    TableRow("Gray graph", (TIME, TIME, TIME), None),
    TableRow("Harborth Graph", (TIME, TIME, TIME), None),
    TableRow("Harries Graph", (TIME, TIME, TIME), None),
    TableRow("Harries-Wong graph", (TIME, TIME, TIME), None),
    TableRow("Horton Graph", (TIME, TIME, TIME), None),
    TableRow("Klein 3-regular Graph", (TIME, TIME, TIME), None),
    TableRow("Markstroem Graph", (3.1, 17.24, 8.25), None),
    TableRow("Meredith Graph", (TIME, TIME, TIME), None),
    TableRow("Szekeres Snark Graph", (TIME, TIME, TIME), None),
)

# --- DRG lower bounds; columns: mu2/2, distance-count bound, i(G) ----------

_DRG_ROWS = (
    TableRow("Biggs-Smith graph", (0.22, 0.33, TIME), None, bold=True,
             array="3,2,2,2,1,1,1;1,1,1,1,1,1,3"),
    TableRow("Brouwer-Haemers", (9.0, 5.79, TIME), None, array="20,18;1,6"),
    TableRow("Clebsch graph", (2.0, 1.6, 2.0), "Clebsch graph"),
    TableRow("Coclique graph of Hoffmann-Singleton graph",
             (5.0, 3.23, TIME), None),
    TableRow("Conway-Smith graph for 3S7", (2.5, 2.28, TIME), None,
             array="10,6,4,1;1,2,6,10"),
    TableRow("Coxeter Graph", (0.5, 0.56, 0.69), "Coxeter Graph", bold=True),
    TableRow("Desargues Graph", (0.5, 0.6, 0.6), "Desargues Graph",
             bold=True),
    TableRow("Dodecahedron", (0.38, 0.6, 0.6), "Dodecahedron", bold=True),
    TableRow("Foster Graph", (0.28, 0.34, TIME), "Foster Graph", bold=True),
    TableRow("Foster graph for 3.Sym(6) graph", (1.5, 1.38, TIME), None,
             array="6,4,2,1;1,1,4,6"),
    TableRow("Gosset Graph", (9.0, 9.0, TIME), None, array="27,10,1;1,10,27"),
    TableRow("Gritsenko strongly regular graph", (14.23, 10.83, TIME), None,
             array="32,16;1,16"),
    TableRow("Hall-Janko graph", (15.0, 11.11, TIME), None,
             array="36,21;1,12"),
    TableRow("Heawood graph", (0.79, 0.78, 1.0), "Heawood graph"),
    TableRow("Hexahedron", (1.0, 1.0, 1.0), "Hexahedron"),
    TableRow("Higman-Sims graph", (10.0, 6.25, TIME), None,
             array="22,21;1,6"),
    TableRow("Hoffman-Singleton graph", (2.5, 1.92, TIME),
             "Hoffman-Singleton graph"),
    TableRow("Icosahedron", (1.38, 1.67, 1.67), "Icosahedron", bold=True),
    TableRow("Klein 7-regular Graph", (2.18, 2.05, 2.5),
             "Klein 7-regular Graph"),
    TableRow("M22 Graph", (7.0, 4.53, TIME), None, array="16,15;1,4"),
    TableRow("Octahedron", (2.0, 2.0, 2.0), "Octahedron"),
    TableRow("Pappus Graph", (0.63, 0.66, 0.78), "Pappus Graph", bold=True),
    TableRow("Perkel Graph", (1.69, 1.36, TIME), None, array="6,5,2;1,1,3"),
    TableRow("Petersen graph", (1.0, 1.0, 1.0), "Petersen graph"),
    TableRow("Schlafli graph", (6.0, 6.0, 7.08), "Schlafli graph"),
    TableRow("Shrikhande graph", (2.0, 2.0, 2.0), "Shrikhande graph"),
    TableRow("Sims-Gewirtz Graph", (4.0, 2.8, TIME), None, array="10,9;1,2"),
    TableRow("Sylvester Graph", (1.5, 1.2, 1.67), "Sylvester Graph"),
    TableRow("Tetrahedron", (2.0, 2.0, 2.0), "Tetrahedron"),
    TableRow("Thomsen graph", (1.5, 1.29, 1.67), "Thomsen graph"),
    TableRow("Tutte 12-Cage", (0.28, 0.33, TIME), None, bold=True,
             array="3,2,2,2,2,2;1,1,1,1,1,3"),
    TableRow("Tutte-Coxeter graph", (0.5, 0.54, 0.6), "Tutte-Coxeter graph",
             bold=True),
    TableRow("Wells graph", (1.38, 1.25, 1.5), "Wells graph"),
)


@dataclass(frozen=True)
class _TableSpec:
    key: str
    title: str
    columns: tuple
    t: int | None
    rows: tuple
    int_exact: bool = False   # published exact column rounded to integers


_TABLES = {
    "t2": _TableSpec("t2", "Closed quadratic bounds on i(G^2)",
                     ("lower", "upper", "i(G^2)"), 2, _T2_ROWS,
                     int_exact=True),
    "t3": _TableSpec("t3", "LP bounds on i(G^3)",
                     ("lp lower", "lp upper", "i(G^3)"), 3, _T3_ROWS),
    "t4": _TableSpec("t4", "LP bounds on i(G^4)",
                     ("lp lower", "lp upper", "i(G^4)"), 4, _T4_ROWS),
    "drg": _TableSpec("drg", "Lower bounds for distance-regular graphs",
                      ("mu2/2", "count bound", "i(G)"), None, _DRG_ROWS),
}

TABLE_KEYS = tuple(_TABLES)

_ALIASES = {"a1": "t2", "a2": "t3", "a3": "t4", "a4": "drg"}


def _spec(key):
    k = key.lower()
    k = _ALIASES.get(k, k)
    if k not in _TABLES:
        raise KeyError(f"unknown table {key!r}; choose from {TABLE_KEYS}")
    return _TABLES[k]


def table_rows(key):
    """The published fixture rows of a table, in print order."""
    return list(_spec(key).rows)


def available_rows(key):
    """Fixture rows whose graph ships in the corpus."""
    return [r for r in _spec(key).rows if r.corpus is not None]


def _match(computed, expected):
    if expected == TIME or computed == TIME:
        return computed == expected
    if computed is None:
        return False
    return abs(float(computed) - float(expected)) <= CELL_TOL


def _exact_cell(g, t, budget):
    """Exact isoperimetric number of G^t, or TIME when out of budget."""
    gp = graph_power(g, t) if t and t > 1 else g
    try:
        cut = isoperimetric_exact(gp, budget)
    except BudgetError:
        return TIME, None
    if not cut.certified:
        return TIME, None
    return float(cut.value), cut.value


def _power_row(g, t, budget, bound_max_n):
    if g.n > bound_max_n:
        lo = hi = TIME
    else:
        lo_pb = lp_lower_sweep(g, t) if t > 2 else closed_lower_t2(g)
        hi_pb = lp_upper_sweep(g, t) if t > 2 else closed_upper_t2(g)
        lo = TIME if lo_pb.partial or lo_pb.value is None else lo_pb.value
        hi = TIME if hi_pb.partial or hi_pb.value is None else hi_pb.value
    ex, frac = _exact_cell(g, t, budget)
    return (lo, hi, ex), frac


def _drg_row(row, budget):
    if row.corpus is not None:
        g = corpus.load_named(row.corpus)
        mu2 = float(laplacian_spectrum(g)[1]) / 2.0
        arr = detect_drg(g)
        count = float(drg_iso_lower(arr, g.n)) if arr is not None else None
        ex, frac = _exact_cell(g, 1, budget)
        return (mu2, count, ex), frac
    arr = IntersectionArray.from_string(row.array)
    theta = array_eigenvalues(arr)
    mu2 = (arr.valency - theta[1]) / 2.0
    count = float(drg_iso_lower(arr, arr.n))
    return (mu2, count, TIME), None


def compute_table(key, names=None, budget=None, bound_max_n=BOUND_MAX_N):
    """Recompute a reference table and mark per-cell agreement.

    names restricts to rows whose printed name contains any given string
    (case-insensitive).  budget drives the exact cells; the default is
    generous enough for every cell the published tables print a number
    for, and no more.
    """
    spec = _spec(key)
    budget = TABLE_BUDGET if budget is None else budget
    wanted = None
    if names is not None:
        wanted = [n.lower() for n in names]
    out = []
    for row in spec.rows:
        if wanted is not None and not any(w in row.name.lower() for w in wanted):
            continue
        if row.corpus is None and row.array is None:
            out.append(RowResult(row.name, "skipped",
                                 reason="not in the bundled corpus",
                                 bold=row.bold, cases=row.cases))
            continue
        if spec.t is not None and row.corpus is None:
            out.append(RowResult(row.name, "skipped",
                                 reason="not in the bundled corpus",
                                 bold=row.bold, cases=row.cases))
            continue
        if spec.t is not None:
            g = corpus.load_named(row.corpus)
            computed, frac = _power_row(g, spec.t, budget, bound_max_n)
        else:
            computed, frac = _drg_row(row, budget)
        cells = []
        for j, (col, c, e) in enumerate(zip(spec.columns, computed,
                                            row.expected)):
            last = j == len(spec.columns) - 1
            if spec.int_exact and last and frac is not None:
                ok = abs(float(round(frac)) - float(e)) <= 1e-9
                note = "" if frac == e else f"prints as {e} after rounding"
            else:
                ok = _match(c, e)
                note = "" if ok else f"published {e}"
            cells.append(Cell(col, c, e, ok, note))
        out.append(RowResult(row.name, "ok", cells=cells, bold=row.bold,
                             cases=row.cases, exact=frac))
    note = T2_EXACT_NOTE if spec.int_exact else ""
    return TableReport(spec.key, spec.title, spec.columns, out, note)


def _fmt_cell(cell):
    c = cell.computed
    if c is None:
        body = "-"
    elif c == TIME:
        body = TIME
    else:
        body = f"{c:.2f}".rstrip("0").rstrip(".")
        if "." not in body:
            body += ".0"
    if cell.match:
        mark = "ok" if not cell.note else f"ok ({cell.note})"
    else:
        mark = f"!= {cell.expected}"
    return f"{body} {mark}"


def render_table(report, show_skipped=True):
    """Plain-text rendering with per-cell agreement markers."""
    header = ["graph"] + list(report.columns)
    lines = []
    body = []
    for r in report.rows:
        if r.status == "skipped":
            if show_skipped:
                lines.append((r.name, r.reason))
            continue
        name = r.name + (" *" if r.bold else "")
        body.append((name, [_fmt_cell(c) for c in r.cells]))
    widths = [max([len(header[0])] + [len(n) for n, _ in body])]
    for j in range(len(report.columns)):
        widths.append(max([len(header[j + 1])] +
                          [len(cells[j]) for _, cells in body]))
    out = [report.title]
    if report.note:
        out.append(f"note: {report.note}")
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for name, cells in body:
        out.append("  ".join(
            s.ljust(w) for s, w in zip([name] + cells, widths)))
    for name, reason in lines:
        out.append(f"(skipped) {name}: {reason}")
    return "\n".join(out)
