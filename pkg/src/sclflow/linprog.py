"""Exact rational linear programming and small-scale linear algebra.

Everything here computes with `fractions.Fraction`; there is no floating
point anywhere, so optima and witnesses are exact and reproducible.  The
solver is a two-phase primal simplex with Bland's anti-cycling pivot rule,
which makes it deterministic for a fixed input.

A brute-force vertex enumerator doubles as an independent oracle for the
simplex and as the engine behind extremal-ray extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd as gcd_int
from typing import Optional, Sequence

from .errors import InputError, LimitExceeded

Rat = Fraction

VERTEX_DIM_LIMIT = 12


def rat(x) -> Fraction:
    """Coerce ints / strings / Fractions to Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def rat_to_json(x: Fraction) -> dict:
    x = rat(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rat_from_json(obj) -> Fraction:
    if isinstance(obj, dict) and "num" in obj and "den" in obj:
        return Fraction(int(obj["num"]), int(obj["den"]))
    raise InputError(f"not a rational JSON object: {obj!r}")


# ---------------------------------------------------------------------------
# Exact linear algebra helpers (dense, small systems only)
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced row echelon form over Q; zero rows dropped.

    The output canonically represents the row space, so it can serve as a
    dictionary key for anything that depends only on that space.
    """
    mat = [[rat(x) for x in row] for row in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        pr = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col] != 0:
                pr = r
                break
        if pr is None:
            continue
        mat[pivot_row], mat[pr] = mat[pr], mat[pivot_row]
        pv = mat[pivot_row][col]
        mat[pivot_row] = [x / pv for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    out = [tuple(row) for row in mat if any(x != 0 for x in row)]
    return tuple(out)


def solve_square(mat: Sequence[Sequence[Fraction]],
                 rhs: Sequence[Fraction]) -> Optional[tuple[Fraction, ...]]:
    """Solve a square system exactly; None if the matrix is singular.

    Rows are scaled to integers and eliminated fraction-free (Bareiss),
    which is several times faster than rational Gaussian elimination.
    """
    n = len(mat)
    aug = []
    for i, row in enumerate(mat):
        vals = [rat(x) for x in row] + [rat(rhs[i])]
        scale = 1
        for v in vals:
            d = v.denominator
            scale = scale * d // gcd_int(scale, d)
        aug.append([int(v * scale) for v in vals])
    prev = 1
    for col in range(n):
        pr = None
        for r in range(col, n):
            if aug[r][col] != 0:
                pr = r
                break
        if pr is None:
            return None
        if pr != col:
            aug[col], aug[pr] = aug[pr], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, n):
            arow, crow = aug[r], aug[col]
            f = arow[col]
            for j in range(col, n + 1):
                arow[j] = (arow[j] * pivot - f * crow[j]) // prev
        prev = pivot
    sol: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            acc -= aug[i][j] * sol[j]
        sol[i] = acc / aug[i][i]
    return tuple(sol)


def nullspace(rows: Sequence[Sequence[Fraction]], dim: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : row . x = 0 for all rows}, in R^dim."""
    red = rref(rows)
    pivots = []
    for row in red:
        for j, x in enumerate(row):
            if x != 0:
                pivots.append(j)
                break
    free = [j for j in range(dim) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * dim
        vec[f] = Fraction(1)
        for row, p in zip(red, pivots):
            vec[p] = -row[f]
        basis.append(tuple(vec))
    return basis


def affine_solution(rows: Sequence[Sequence[Fraction]],
                    rhs: Sequence[Fraction],
                    dim: int) -> Optional[tuple[Fraction, ...]]:
    """One particular solution of rows . x = rhs, or None if inconsistent."""
    aug = [list(map(rat, row)) + [rat(b)] for row, b in zip(rows, rhs)]
    red = rref(aug)
    sol = [Fraction(0)] * dim
    for row in red:
        lead = None
        for j in range(dim):
            if row[j] != 0:
                lead = j
                break
        if lead is None:
            if row[dim] != 0:
                return None
            continue
        # back-substitution is unnecessary: rref rows already reduced
        sol[lead] = row[dim]
    # verify (free variables set to zero may interact with non-reduced cols)
    for row, b in zip(rows, rhs):
        if sum(rat(c) * s for c, s in zip(row, sol)) != rat(b):
            return None
    return tuple(sol)


# ---------------------------------------------------------------------------
# LP data types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearProgram:
    """Maximize objective . x subject to eq rows (= rhs), ineq rows (<= rhs),
    and x_i >= 0 wherever nonneg_mask[i] is True (free otherwise)."""

    objective: tuple[Fraction, ...]
    eq_constraints: tuple[tuple[tuple[Fraction, ...], Fraction], ...] = ()
    ineq_constraints: tuple[tuple[tuple[Fraction, ...], Fraction], ...] = ()
    nonneg_mask: Optional[tuple[bool, ...]] = None

    def dim(self) -> int:
        return len(self.objective)

    def mask(self) -> tuple[bool, ...]:
        if self.nonneg_mask is None:
            return tuple(True for _ in self.objective)
        return self.nonneg_mask


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction] = None
    witness: Optional[tuple[Fraction, ...]] = None
    # duals: one multiplier per eq row followed by one per ineq row
    eq_duals: Optional[tuple[Fraction, ...]] = None
    ineq_duals: Optional[tuple[Fraction, ...]] = None


def make_lp(objective, eq=(), ineq=(), nonneg=None) -> LinearProgram:
    obj = tuple(rat(x) for x in objective)
    eqs = tuple((tuple(rat(x) for x in row), rat(b)) for row, b in eq)
    ineqs = tuple((tuple(rat(x) for x in row), rat(b)) for row, b in ineq)
    mask = None if nonneg is None else tuple(bool(b) for b in nonneg)
    return LinearProgram(obj, eqs, ineqs, mask)


# ---------------------------------------------------------------------------
# Two-phase simplex, Bland's rule
# ---------------------------------------------------------------------------

class _Tableau:
    """Dense simplex tableau over Fractions.

    Columns: structural variables first, then slacks, then artificials,
    then the rhs.  Rows carry the constraint system; `obj` is the reduced
    cost row maintained through pivots.
    """

    def __init__(self, rows, rhs, ncols):
        self.rows = rows          # list of list[Fraction], each length ncols
        self.rhs = rhs            # list[Fraction]
        self.ncols = ncols
        self.basis: list[int] = []
        self.obj: list[Fraction] = []
        self.obj_const = Fraction(0)

    def set_objective(self, coeffs):
        # reduced costs: start from raw objective, then price out basis
        self.obj = list(coeffs) + [Fraction(0)] * (self.ncols - len(coeffs))
        self.obj_const = Fraction(0)
        for r, b in enumerate(self.basis):
            cb = self.obj[b]
            if cb != 0:
                self.obj = [o - cb * a for o, a in zip(self.obj, self.rows[r])]
                self.obj_const += cb * self.rhs[r]

    def pivot(self, r, c):
        pv = self.rows[r][c]
        inv = Fraction(1) / pv
        self.rows[r] = [x * inv for x in self.rows[r]]
        self.rhs[r] *= inv
        prow = self.rows[r]
        prhs = self.rhs[r]
        for i in range(len(self.rows)):
            if i == r:
                continue
            f = self.rows[i][c]
            if f != 0:
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], prow)]
                self.rhs[i] -= f * prhs
        f = self.obj[c]
        if f != 0:
            self.obj = [a - f * b for a, b in zip(self.obj, prow)]
            self.obj_const += f * prhs
        self.basis[r] = c

    def run(self, allowed) -> str:
        """Maximize until no allowed column has positive reduced cost.

        Bland's rule: entering column is the smallest-index one with
        positive reduced cost; the leaving row minimizes the ratio, ties
        broken by the smallest basic variable index.
        """
        while True:
            enter = None
            for j in range(self.ncols):
                if allowed[j] and self.obj[j] > 0:
                    enter = j
                    break
            if enter is None:
                return "optimal"
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (
                            ratio == best and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                return "unbounded"
            self.pivot(leave, enter)


def solve_lp(lp: LinearProgram) -> LPResult:
    """Exact optimum of `lp`; deterministic for fixed input.

    When the LP is optimal, the witness satisfies every constraint exactly
    and objective . witness == value.  Dual multipliers for all rows are
    returned as well (used for column pricing elsewhere).
    """
    dim = lp.dim()
    for row, _ in list(lp.eq_constraints) + list(lp.ineq_constraints):
        if len(row) != dim:
            raise InputError(
                f"constraint row of length {len(row)} does not match objective of length {dim}")
    mask = lp.mask()
    if len(mask) != dim:
        raise InputError("nonneg_mask length does not match objective")

    # map original variables to nonnegative columns: free x -> x+ - x-
    col_of_var: list[tuple[int, Optional[int]]] = []
    nstruct = 0
    for i in range(dim):
        if mask[i]:
            col_of_var.append((nstruct, None))
            nstruct += 1
        else:
            col_of_var.append((nstruct, nstruct + 1))
            nstruct += 2

    def expand(row):
        out = [Fraction(0)] * nstruct
        for i, coef in enumerate(row):
            c = rat(coef)
            if c == 0:
                continue
            p, m = col_of_var[i]
            out[p] += c
            if m is not None:
                out[m] -= c
        return out

    m_eq = len(lp.eq_constraints)
    m_ineq = len(lp.ineq_constraints)
    nslack = m_ineq
    rows = []
    rhs = []
    kinds = []  # per row: "eq" or "ineq", in original order (eq first)
    for row, b in lp.eq_constraints:
        rows.append(expand(row))
        rhs.append(rat(b))
        kinds.append("eq")
    for row, b in lp.ineq_constraints:
        rows.append(expand(row))
        rhs.append(rat(b))
        kinds.append("ineq")

    # attach slack columns for inequalities
    for i, r in enumerate(rows):
        slacks = [Fraction(0)] * nslack
        rows[i] = r + slacks
    si = 0
    for i, kind in enumerate(kinds):
        if kind == "ineq":
            rows[i][nstruct + si] = Fraction(1)
            si += 1

    # normalize rhs >= 0 (negating the whole slack-augmented equation)
    row_sign = [Fraction(1)] * len(rows)
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
            row_sign[i] = Fraction(-1)

    # initial basis: slack where it has coefficient +1, else artificial
    nart = 0
    art_col_of_row = {}
    basis = []
    for i, kind in enumerate(kinds):
        slack_col = None
        for j in range(nstruct, nstruct + nslack):
            if rows[i][j] == 1:
                slack_col = j
                break
        if kind == "ineq" and slack_col is not None:
            basis.append(slack_col)
        else:
            art_col_of_row[i] = nstruct + nslack + nart
            basis.append(nstruct + nslack + nart)
            nart += 1
    ncols = nstruct + nslack + nart
    for i in range(len(rows)):
        arts = [Fraction(0)] * nart
        rows[i] = rows[i] + arts
        if i in art_col_of_row:
            rows[i][art_col_of_row[i]] = Fraction(1)

    tab = _Tableau(rows, rhs, ncols)
    tab.basis = basis

    art_cols = set(art_col_of_row.values())
    allowed_all = [True] * ncols

    if nart:
        # phase 1: maximize -sum(artificials)
        phase1 = [Fraction(0)] * ncols
        for c in art_cols:
            phase1[c] = Fraction(-1)
        tab.set_objective(phase1)
        status = tab.run(allowed_all)
        if status != "optimal" or tab.obj_const != 0:
            return LPResult(status="infeasible")
        # drive artificials out of the basis where possible; redundant rows
        # keep a zero-valued artificial basic, which is harmless once the
        # artificial columns are barred from re-entering
        for r in range(len(tab.rows)):
            if tab.basis[r] in art_cols and tab.rhs[r] == 0:
                for j in range(nstruct + nslack):
                    if tab.rows[r][j] != 0:
                        tab.pivot(r, j)
                        break

    allowed = [j not in art_cols for j in range(ncols)]
    objective = expand(lp.objective) + [Fraction(0)] * (nslack + nart)
    tab.set_objective(objective)
    status = tab.run(allowed)
    if status == "unbounded":
        return LPResult(status="unbounded")

    values = [Fraction(0)] * ncols
    for r, b in enumerate(tab.basis):
        values[b] = tab.rhs[r]
    witness = []
    for i in range(dim):
        p, m = col_of_var[i]
        witness.append(values[p] - (values[m] if m is not None else Fraction(0)))
    witness = tuple(witness)
    value = sum(c * w for c, w in zip(lp.objective, witness))

    # duals: the reduced cost of a slack column is -y for its (stored) row,
    # and the slack sign flip cancels the row sign flip, so an ineq dual is
    # always -obj[slack].  Equality duals read off the artificial column,
    # which was attached after normalization, so the row sign reappears.
    eq_duals = []
    ineq_duals = []
    si = 0
    for i, kind in enumerate(kinds):
        if kind == "eq":
            col = art_col_of_row[i]
            eq_duals.append(-row_sign[i] * tab.obj[col])
        else:
            col = nstruct + si
            si += 1
            ineq_duals.append(-tab.obj[col])
    return LPResult(status="optimal", value=value, witness=witness,
                    eq_duals=tuple(eq_duals), ineq_duals=tuple(ineq_duals))


# ---------------------------------------------------------------------------
# Vertex enumeration (independent oracle, and ray extraction backend)
# ---------------------------------------------------------------------------

def enumerate_vertices(ineq_constraints, dimension: int,
                       limit: int = VERTEX_DIM_LIMIT) -> list[tuple[Fraction, ...]]:
    """All vertices of {x : row . x <= rhs}, by brute force over bases.

    Every vertex of a polyhedron is the unique solution of `dimension`
    linearly independent active constraints, so trying all constraint
    subsets of that size finds exactly the vertex set.  Deliberately
    independent of solve_lp.
    """
    if dimension > limit:
        raise LimitExceeded(
            f"vertex enumeration limited to dimension {limit}, got {dimension}")
    cons = [(tuple(rat(x) for x in row), rat(b)) for row, b in ineq_constraints]
    for row, _ in cons:
        if len(row) != dimension:
            raise InputError("constraint dimension mismatch")
    # integer-scaled copies make the containment filter cheap
    int_cons = []
    for row, b in cons:
        scale = 1
        for v in list(row) + [b]:
            scale = scale * v.denominator // gcd_int(scale, v.denominator)
        int_cons.append(([int(v * scale) for v in row], int(b * scale)))
    seen = set()
    out = []
    for subset in combinations(range(len(cons)), dimension):
        mat = [cons[i][0] for i in subset]
        rhs = [cons[i][1] for i in subset]
        sol = solve_square(mat, rhs)
        if sol is None or sol in seen:
            continue
        lcm = 1
        for v in sol:
            lcm = lcm * v.denominator // gcd_int(lcm, v.denominator)
        scaled = [int(v * lcm) for v in sol]
        if all(sum(a * x for a, x in zip(row, scaled)) <= b * lcm
               for row, b in int_cons):
            seen.add(sol)
            out.append(sol)
    out.sort()
    return out
