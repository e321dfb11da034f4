"""Computing scl through the paired unit-outflow linear program.

The value of a word with exponent matrices (x, y) and n blocks per side is
(n - S)/2, where S maximizes the total decomposition weight of a paired
pair of unit-outflow flows (v_A, v_B) into disc vectors of the two cones.
Unit outflow plus the pairing identity make every cone condition automatic,
so the feasible v_A are exactly the doubly stochastic n x n matrices and
v_B is the entrywise image (v_B)[k][i] = (v_A)[i][k+1 mod n].

Disc-vector columns are generated lazily: a restricted LP is solved and
seeded with new columns of positive reduced cost until none remain, which
certifies the optimum over the full column set.  Truncation to outflow
bound B can only shrink the admissible decompositions, so the computed
value is always an upper bound for scl, reported as `stabilized` only when
two consecutive bounds agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cones import ConeSpec, cone_spec, in_cone, lp_columns
from .errors import InputError, InternalCheckError, LimitExceeded
from .graphs import Flow, flow_to_json
from .linprog import make_lp, rat_to_json, solve_lp
from .words import Word

SCL_N_LIMIT = 6
DEFAULT_BOUND = 3
_CG_DIRECT_THRESHOLD = 260
_CG_BATCH = 120


def pair_flow(v_a: Flow) -> Flow:
    """The partner flow under the pairing identity, indices cyclic."""
    n = v_a.n
    return Flow(n, tuple(tuple(v_a.entries[i][(k + 1) % n] for i in range(n))
                         for k in range(n)))


def is_paired(v_a: Flow, v_b: Flow) -> bool:
    return v_a.n == v_b.n and pair_flow(v_a).entries == v_b.entries


# ---------------------------------------------------------------------------
# Packing LP with lazy column generation
# ---------------------------------------------------------------------------

def _solve_packing(eq_rows, eq_rhs, n_fixed, fixed_obj, capacity_rows,
                   column_groups):
    """Maximize fixed_obj . a + sum(t) subject to

        eq_rows . a = eq_rhs
        sum_d t_d * col_d  <=  capacity_rows . (a, 1)   per capacity row

    `capacity_rows` maps each packing row to a linear form in the fixed
    variables (list of (var index, coef)) plus a constant.  Each column in
    `column_groups` is a sparse map {row index: coef} with objective 1.
    Returns (LPResult over all columns, list of active column ids).
    """
    ncap = len(capacity_rows)
    all_cols = []  # (group, index_in_group, sparse dict)
    for gi, group in enumerate(column_groups):
        for ci, col in enumerate(group):
            all_cols.append((gi, ci, col))

    def build_lp(active_ids):
        nvar = n_fixed + len(active_ids)
        eqs = []
        for row, b in zip(eq_rows, eq_rhs):
            full = list(row) + [Fraction(0)] * len(active_ids)
            eqs.append((full, b))
        ineqs = []
        for r in range(ncap):
            coefs = [Fraction(0)] * nvar
            terms, const = capacity_rows[r]
            for vi, cf in terms:
                coefs[vi] -= cf  # move capacity to the left: t - cap <= const
            for k, cid in enumerate(active_ids):
                cf = all_cols[cid][2].get(r)
                if cf:
                    coefs[n_fixed + k] = Fraction(cf)
            ineqs.append((coefs, const))
        obj = list(fixed_obj) + [Fraction(1)] * len(active_ids)
        return make_lp(obj, eq=eqs, ineq=ineqs)

    if len(all_cols) <= _CG_DIRECT_THRESHOLD:
        active = list(range(len(all_cols)))
        res = solve_lp(build_lp(active))
        return res, active

    # start with the lightest columns per group (deterministic)
    active = []
    for gi, group in enumerate(column_groups):
        cheapest = _cheapest_mass(group)
        light = [cid for cid, (g, _c, col) in enumerate(all_cols)
                 if g == gi and sum(col.values()) <= cheapest]
        active.extend(light[:_CG_BATCH])
    active = sorted(set(active)) or [0]

    while True:
        res = solve_lp(build_lp(active))
        if res.status != "optimal":
            return res, active
        duals = res.ineq_duals
        active_set = set(active)
        violating = []
        for cid, (_gi, _ci, col) in enumerate(all_cols):
            if cid in active_set:
                continue
            rc = Fraction(1) - sum(duals[r] * cf for r, cf in col.items())
            if rc > 0:
                violating.append((rc, cid))
        if not violating:
            return res, active
        violating.sort(key=lambda p: (-p[0], p[1]))
        active = sorted(active_set | {cid for _rc, cid in violating[:_CG_BATCH]})


def _cheapest_mass(group):
    return min((sum(col.values()) for col in group), default=0)


# ---------------------------------------------------------------------------
# Klein function values
# ---------------------------------------------------------------------------

def klein_value(spec: ConeSpec, v: Flow, bound: int) -> Fraction:
    """Largest total weight of a disc-vector decomposition of v that stays
    entrywise below v, using disc vectors with outflow <= bound.

    This is a certified lower bound for the Klein function at v, exact once
    the bound suffices.
    """
    if not in_cone(spec, v):
        raise InputError("flow is not in the cone of this spec")
    n = spec.n
    cols = lp_columns(spec, bound)
    columns = []
    for d in cols:
        sparse = {}
        for i in range(n):
            for j in range(n):
                if d.entries[i][j]:
                    sparse[i * n + j] = int(d.entries[i][j])
        columns.append(sparse)
    capacity = [((), Fraction(v.entries[r // n][r % n])) for r in range(n * n)]
    res, _active = _solve_packing([], [], 0, [], capacity, [columns])
    if res.status != "optimal":
        raise InternalCheckError(f"klein LP ended with status {res.status}")
    return res.value


# ---------------------------------------------------------------------------
# scl proper
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SideDecomposition:
    weights: tuple[Fraction, ...]
    parts: tuple[Flow, ...]

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))


@dataclass(frozen=True)
class SclCertificate:
    v_a: Flow
    v_b: Flow
    side_a: SideDecomposition
    side_b: SideDecomposition

    def kappa_sum(self) -> Fraction:
        return self.side_a.total() + self.side_b.total()


@dataclass(frozen=True)
class SclResult:
    value: Fraction
    status: str  # "stabilized" | "upper_bound"
    bound_used: int
    certificate: SclCertificate
    word_blocks: int

    def to_json(self) -> dict:
        return {
            "scl": rat_to_json(self.value),
            "status": self.status,
            "bound_used": self.bound_used,
            "certificate": {
                "v_A": flow_to_json(self.certificate.v_a),
                "v_B": flow_to_json(self.certificate.v_b),
                "decomposition_A": [
                    {"t": rat_to_json(t), "d": flow_to_json(d)}
                    for t, d in zip(self.certificate.side_a.weights,
                                    self.certificate.side_a.parts)],
                "decomposition_B": [
                    {"t": rat_to_json(t), "d": flow_to_json(d)}
                    for t, d in zip(self.certificate.side_b.weights,
                                    self.certificate.side_b.parts)],
            },
        }


_SCL_LP_CACHE: dict = {}


def _scl_lp(spec_x: ConeSpec, spec_y: ConeSpec, bound: int):
    """Optimal kappa-sum over paired unit-outflow vectors, with certificate.

    Returns (kappa_sum, certificate builder inputs).  Cached under the two
    cone keys: the LP depends on the exponent matrices only through their
    row spaces.
    """
    cache_key = (spec_x.key(), spec_y.key(), bound)
    hit = _SCL_LP_CACHE.get(cache_key)
    if hit is not None:
        return hit
    n = spec_x.n
    nn = n * n

    cols_x = lp_columns(spec_x, bound)
    cols_y = lp_columns(spec_y, bound)

    def sparse_cols(cols, row_of_entry):
        out = []
        for d in cols:
            sp = {}
            for i in range(n):
                for j in range(n):
                    v = d.entries[i][j]
                    if v:
                        sp[row_of_entry(i, j)] = int(v)
            out.append(sp)
        return out

    # packing rows 0..nn-1: side A at entry (i, j) capped by a[i][j]
    # packing rows nn..2nn-1: side B at entry (k, i) capped by a[i][k+1 mod n]
    col_group_a = sparse_cols(cols_x, lambda i, j: i * n + j)
    col_group_b = sparse_cols(cols_y, lambda k, i: nn + k * n + i)

    eq_rows = []
    eq_rhs = []
    for i in range(n):  # unit outflow of v_A
        row = [Fraction(0)] * nn
        for j in range(n):
            row[i * n + j] = Fraction(1)
        eq_rows.append(row)
        eq_rhs.append(Fraction(1))
    for j in range(n):  # unit inflow of v_A (conservation at outflow one)
        row = [Fraction(0)] * nn
        for i in range(n):
            row[i * n + j] = Fraction(1)
        eq_rows.append(row)
        eq_rhs.append(Fraction(1))

    capacity = []
    for r in range(nn):
        i, j = divmod(r, n)
        capacity.append((((i * n + j, Fraction(1)),), Fraction(0)))
    for r in range(nn):
        k, i = divmod(r, n)
        capacity.append((((i * n + (k + 1) % n, Fraction(1)),), Fraction(0)))

    fixed_obj = [Fraction(0)] * nn
    res, active = _solve_packing(eq_rows, eq_rhs, nn, fixed_obj, capacity,
                                 [col_group_a, col_group_b])
    if res.status != "optimal":
        raise InternalCheckError(
            f"paired unit-outflow LP ended with status {res.status}; "
            "the feasible set is provably nonempty")

    v_a = Flow(n, tuple(tuple(res.witness[i * n + j] for j in range(n))
                        for i in range(n)))
    v_b = pair_flow(v_a)
    weights_a, parts_a, weights_b, parts_b = [], [], [], []
    ncols_a = len(col_group_a)
    for k, cid in enumerate(active):
        t = res.witness[nn + k]
        if t == 0:
            continue
        if cid < ncols_a:
            weights_a.append(t)
            parts_a.append(cols_x[cid])
        else:
            weights_b.append(t)
            parts_b.append(cols_y[cid - ncols_a])
    cert = SclCertificate(
        v_a=v_a, v_b=v_b,
        side_a=SideDecomposition(tuple(weights_a), tuple(parts_a)),
        side_b=SideDecomposition(tuple(weights_b), tuple(parts_b)))
    out = (res.value, cert)
    _SCL_LP_CACHE[cache_key] = out
    return out


def scl(w: Word, bound: int = DEFAULT_BOUND, stabilize: bool = True,
        n_limit: int = SCL_N_LIMIT) -> SclResult:
    """Upper-bounding scl value at the given truncation bound.

    With stabilization on, bounds 1, 2, ... are tried in turn and the
    computation stops at the first pair of consecutive equal values, or as
    soon as the value meets the combinatorial lower bound (larger bounds
    provably cannot move it then); the result is reported as `stabilized`.
    Otherwise (or if no bound pair agrees) the value at `bound` is reported
    with the honest `upper_bound` status.
    """
    from .bounds import lower_bound

    if w.n > n_limit:
        raise LimitExceeded(f"scl computation limited to {n_limit} blocks per side")
    if bound < 1:
        raise InputError("bound must be at least 1")
    spec_x = cone_spec(w.n, w.x.rows)
    spec_y = cone_spec(w.n, w.y.rows)
    lo = lower_bound(w) if stabilize else None
    prev: Optional[Fraction] = None
    prev_cert = None
    for b in range(1, bound + 1):
        ksum, cert = _scl_lp(spec_x, spec_y, b)
        value = (Fraction(w.n) - ksum) / 2
        if stabilize and (value == lo or (prev is not None and value == prev)):
            return SclResult(value=value, status="stabilized", bound_used=b,
                             certificate=cert, word_blocks=w.n)
        prev, prev_cert = value, cert
    return SclResult(value=prev, status="upper_bound", bound_used=bound,
                     certificate=prev_cert, word_blocks=w.n)


def scl_bracket(w: Word, bound: int = DEFAULT_BOUND) -> tuple[Fraction, Fraction]:
    """(combinatorial lower bound, LP upper value); equality certifies scl."""
    from .bounds import lower_bound

    lo = lower_bound(w)
    hi = scl(w, bound).value
    if lo > hi:
        raise InternalCheckError(
            f"lower bound {lo} exceeds LP upper value {hi}; this falsifies "
            "one of the two implementations")
    return lo, hi


def verify_certificate(result: SclResult, w: Word) -> bool:
    """Re-derive the reported value from the certificate by exact arithmetic."""
    cert = result.certificate
    n = w.n
    v_a, v_b = cert.v_a, cert.v_b
    if not is_paired(v_a, v_b):
        return False
    for i in range(n):
        if v_a.outflow(i) != 1 or v_a.inflow(i) != 1:
            return False
        if v_b.outflow(i) != 1 or v_b.inflow(i) != 1:
            return False
    spec_x = cone_spec(n, w.x.rows)
    spec_y = cone_spec(n, w.y.rows)
    if not in_cone(spec_x, v_a) or not in_cone(spec_y, v_b):
        return False
    for side, v, spec in ((cert.side_a, v_a, spec_x), (cert.side_b, v_b, spec_y)):
        total = [[Fraction(0)] * n for _ in range(n)]
        for t, d in zip(side.weights, side.parts):
            if t < 0 or not in_cone(spec, d):
                return False
            for i in range(n):
                for j in range(n):
                    total[i][j] += t * d.entries[i][j]
        for i in range(n):
            for j in range(n):
                if total[i][j] > v.entries[i][j]:
                    return False
    return result.value == (Fraction(n) - cert.kappa_sum()) / 2
