"""Dense two-phase tableau simplex for the small LPs used by the bounds.

Optimizes c @ x (min or max) subject to A_ub x <= b_ub, A_eq x = b_eq, with
x >= 0 except for explicitly free variables (sign splitting).  Pivoting is
deterministic: Dantzig's rule (most negative reduced cost, lowest index on
ties) with an automatic permanent switch to Bland's rule once a run of
degenerate pivots is detected, which guarantees termination.  A pure-Bland
mode is available via pivot_rule="bland".
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["LPProblem", "LPSolution", "solve", "check_feasible"]

PIVOT_TOL = 1e-10
FEAS_TOL = 1e-9
_STALL_LIMIT = 64  # degenerate pivots in a row before switching to Bland


@dataclass
class LPProblem:
    """c @ x -> min (or max)  s.t.  a_ub x <= b_ub, a_eq x = b_eq, x >= 0.

    Variables listed in `free` are unrestricted in sign.  The classmethod
    from_rows accepts mixed <= / = / >= rows and normalizes them here.
    """

    c: np.ndarray
    a_ub: np.ndarray | None = None
    b_ub: np.ndarray | None = None
    a_eq: np.ndarray | None = None
    b_eq: np.ndarray | None = None
    free: frozenset = field(default_factory=frozenset)
    sense: str = "min"

    def __post_init__(self):
        if self.sense not in ("min", "max"):
            raise ValueError("sense must be 'min' or 'max'")
        self.c = np.atleast_1d(np.asarray(self.c, dtype=np.float64))
        nvar = self.c.shape[0]
        for attr in ("a_ub", "a_eq"):
            m = getattr(self, attr)
            if m is not None:
                m = np.atleast_2d(np.asarray(m, dtype=np.float64))
                if m.shape[1] != nvar:
                    raise ValueError(f"{attr} has {m.shape[1]} columns, expected {nvar}")
                setattr(self, attr, m)
        for attr, rows in (("b_ub", self.a_ub), ("b_eq", self.a_eq)):
            v = getattr(self, attr)
            if (v is None) != (rows is None):
                raise ValueError(f"{attr} must be given together with its matrix")
            if v is not None:
                v = np.atleast_1d(np.asarray(v, dtype=np.float64))
                if v.shape[0] != rows.shape[0]:
                    raise ValueError(f"{attr} length does not match its matrix")
                setattr(self, attr, v)
        self.free = frozenset(self.free)
        if any(not 0 <= j < nvar for j in self.free):
            raise ValueError("free variable index out of range")

    @classmethod
    def from_rows(cls, c, rows, sense="min", free=()):
        """Build a problem from (coefficients, relation, rhs) triples.

        Relations are "<=", "=", ">="; >= rows are stored negated.
        """
        a_ub, b_ub, a_eq, b_eq = [], [], [], []
        for coeffs, rel, rhs in rows:
            coeffs = np.asarray(coeffs, dtype=np.float64)
            if rel == "<=":
                a_ub.append(coeffs)
                b_ub.append(rhs)
            elif rel == ">=":
                a_ub.append(-coeffs)
                b_ub.append(-rhs)
            elif rel == "=":
                a_eq.append(coeffs)
                b_eq.append(rhs)
            else:
                raise ValueError(f"unknown relation {rel!r}")
        return cls(
            c=c,
            a_ub=np.array(a_ub) if a_ub else None,
            b_ub=np.array(b_ub) if b_ub else None,
            a_eq=np.array(a_eq) if a_eq else None,
            b_eq=np.array(b_eq) if b_eq else None,
            free=frozenset(free),
            sense=sense,
        )

    @property
    def num_vars(self):
        return self.c.shape[0]

    @property
    def num_rows(self):
        rows = 0
        if self.a_ub is not None:
            rows += self.a_ub.shape[0]
        if self.a_eq is not None:
            rows += self.a_eq.shape[0]
        return rows


@dataclass
class LPSolution:
    status: str  # optimal | infeasible | unbounded | failed
    x: np.ndarray | None
    objective: float | None
    iterations: int
    basis: tuple = ()
    message: str = ""

    @property
    def ok(self):
        return self.status == "optimal"


def _pivot_col(tableau, rule, tol=PIVOT_TOL):
    """Entering column index, or -1 if the tableau is optimal."""
    costs = tableau[-1, :-1]
    if rule == "bland":
        idx = np.nonzero(costs < -tol)[0]
        return int(idx[0]) if idx.size else -1
    j = int(np.argmin(costs))
    return j if costs[j] < -tol else -1


def _pivot_row(tableau, col, nbody, tol=PIVOT_TOL):
    """Leaving row by minimum ratio, lowest row index on ties; -1 if unbounded."""
    column = tableau[:nbody, col]
    rhs = tableau[:nbody, -1]
    mask = column > tol
    if not mask.any():
        return -1
    ratios = np.full(nbody, np.inf)
    ratios[mask] = rhs[mask] / column[mask]
    best = ratios.min()
    candidates = np.nonzero(ratios <= best + 1e-15)[0]
    return int(candidates[0])


def _apply_pivot(tableau, basis, row, col):
    basis[row] = col
    pivval = tableau[row, col]
    tableau[row] /= pivval
    colvals = tableau[:, col].copy()
    colvals[row] = 0.0
    tableau -= np.outer(colvals, tableau[row])
    tableau[:, col] = 0.0
    tableau[row, col] = 1.0


def _run_simplex(tableau, basis, nbody, maxiter, rule, start_iter=0):
    """Drive the tableau to optimality; returns (status, iterations used)."""
    it = start_iter
    stall = 0
    current_rule = rule
    while it < maxiter:
        col = _pivot_col(tableau, current_rule)
        if col < 0:
            return "optimal", it
        row = _pivot_row(tableau, col, nbody)
        if row < 0:
            return "unbounded", it
        degenerate = tableau[row, -1] <= PIVOT_TOL
        _apply_pivot(tableau, basis, row, col)
        it += 1
        if current_rule != "bland":
            stall = stall + 1 if degenerate else 0
            if stall >= _STALL_LIMIT:
                current_rule = "bland"
    return "iteration_limit", it


def solve(problem, maxiter=None, pivot_rule="dantzig"):
    """Two-phase simplex; returns an LPSolution in the original variables."""
    if pivot_rule not in ("dantzig", "bland"):
        raise ValueError("pivot_rule must be 'dantzig' or 'bland'")
    nvar = problem.num_vars
    csense = problem.c if problem.sense == "min" else -problem.c

    # sign-split the free variables: x_j = x_j' - t, one shared negative part
    # would couple them, so each free variable gets its own negative column
    free = sorted(problem.free)
    neg_col = {j: nvar + k for k, j in enumerate(free)}
    nsplit = nvar + len(free)

    def widen(mat):
        if mat is None or not free:
            return mat
        extra = -mat[:, free]
        return np.hstack([mat, extra])

    c = np.concatenate([csense, -csense[free]]) if free else csense.copy()
    a_ub = widen(problem.a_ub)
    a_eq = widen(problem.a_eq)

    n_ub = 0 if a_ub is None else a_ub.shape[0]
    n_eq = 0 if a_eq is None else a_eq.shape[0]
    nrows = n_ub + n_eq
    if nrows == 0:
        raise ValueError("problem has no constraints")
    if maxiter is None:
        maxiter = 10 * (nrows + nsplit)

    a = np.zeros((nrows, nsplit + n_ub))
    b = np.zeros(nrows)
    if a_ub is not None:
        a[:n_ub, :nsplit] = a_ub
        a[:n_ub, nsplit : nsplit + n_ub] = np.eye(n_ub)
        b[:n_ub] = problem.b_ub
    if a_eq is not None:
        a[n_ub:, :nsplit] = a_eq
        b[n_ub:] = problem.b_eq

    # make rhs nonnegative
    negrows = b < 0
    a[negrows] *= -1.0
    b[negrows] *= -1.0

    # rows whose slack can start in the basis: <= rows that were not flipped
    slack_ok = np.zeros(nrows, dtype=bool)
    slack_ok[:n_ub] = ~negrows[:n_ub]
    art_rows = np.nonzero(~slack_ok)[0]
    n_art = art_rows.size
    ncols = nsplit + n_ub + n_art

    tableau = np.zeros((nrows + 2, ncols + 1))
    tableau[:nrows, : nsplit + n_ub] = a
    tableau[:nrows, -1] = b
    basis = np.zeros(nrows, dtype=np.intp)
    for i in range(nrows):
        if slack_ok[i]:
            basis[i] = nsplit + i
    for k, r in enumerate(art_rows):
        col = nsplit + n_ub + k
        tableau[r, col] = 1.0
        basis[r] = col
    tableau[-2, :nsplit] = c  # phase-2 objective
    # phase-1 objective: sum of artificials, expressed in nonbasic terms
    tableau[-1, nsplit + n_ub :ncols] = 1.0
    for r in art_rows:
        tableau[-1] -= tableau[r]

    status, iters = _run_simplex(tableau[:, :], basis, nrows, maxiter, pivot_rule)
    if status == "iteration_limit":
        return LPSolution(
            "failed", None, None, iters,
            message=f"iteration cap {maxiter} hit in phase 1",
        )
    if tableau[-1, -1] < -FEAS_TOL:
        return LPSolution(
            "infeasible", None, None, iters,
            message=f"phase-1 objective {-tableau[-1, -1]:.3e}",
        )

    # pivot leftover artificials out of the basis, drop rows where impossible
    keep = np.ones(nrows, dtype=bool)
    for i in range(nrows):
        if basis[i] >= nsplit + n_ub:
            pivots = np.nonzero(np.abs(tableau[i, : nsplit + n_ub]) > PIVOT_TOL)[0]
            if pivots.size:
                _apply_pivot(tableau, basis, i, int(pivots[0]))
                iters += 1
            else:
                keep[i] = False

    body = tableau[:nrows][keep]
    basis = basis[keep]
    nbody = body.shape[0]
    phase2 = np.vstack([body, tableau[-2]])
    phase2 = np.delete(phase2, np.s_[nsplit + n_ub : ncols], axis=1)
    # express the objective in terms of the nonbasic variables
    for i, bcol in enumerate(basis):
        coef = phase2[-1, bcol]
        if abs(coef) > PIVOT_TOL:
            phase2[-1] -= coef * phase2[i]

    status, iters = _run_simplex(phase2, basis, nbody, maxiter, pivot_rule, iters)
    if status == "iteration_limit":
        return LPSolution(
            "failed", None, None, iters,
            message=f"iteration cap {maxiter} hit in phase 2",
        )
    if status != "optimal":
        return LPSolution(status, None, None, iters, message="phase 2")

    xfull = np.zeros(nsplit + n_ub)
    for i, bcol in enumerate(basis):
        xfull[bcol] = phase2[i, -1]
    x = xfull[:nvar].copy()
    for j in free:
        x[j] -= xfull[neg_col[j]]
    objective = float(problem.c @ x)
    return LPSolution("optimal", x, objective, iters, basis=tuple(int(v) for v in basis))


def check_feasible(problem, x, tol=FEAS_TOL):
    """Verify a point against all constraints of an LPProblem.

    Row r is accepted when its violation is at most tol * (1 + |rhs_r|).
    Returns (ok, max_scaled_violation, list of offending row labels).
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape[0] != problem.num_vars:
        raise ValueError("point has wrong dimension")
    bad = []
    worst = 0.0

    def score(violation, rhs, label):
        nonlocal worst
        scaled = violation / (1.0 + abs(rhs))
        worst = max(worst, scaled)
        if scaled > tol:
            bad.append(label)

    if problem.a_ub is not None:
        resid = problem.a_ub @ x - problem.b_ub
        for r, v in enumerate(resid):
            score(max(0.0, float(v)), float(problem.b_ub[r]), f"ub[{r}]")
    if problem.a_eq is not None:
        resid = problem.a_eq @ x - problem.b_eq
        for r, v in enumerate(resid):
            score(abs(float(v)), float(problem.b_eq[r]), f"eq[{r}]")
    for j in range(problem.num_vars):
        if j not in problem.free:
            score(max(0.0, -float(x[j])), 0.0, f"bound[{j}]")
    return not bad, worst, bad
