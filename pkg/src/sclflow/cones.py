"""Flow cones attached to exponent matrices, and their integral geometry.

For an exponent matrix z, the weight of a flow f has one component per
row: sum_j z[i][j] * outflow_j(f).  The cone V(z) collects the flows with
vanishing weight; its nonzero integral members with strongly connected
support are the disc vectors D(z).  This module enumerates disc vectors up
to an outflow bound, classifies essential and extremal members, and
extracts the extremal rays of the cone.

The weight of a flow depends only on its outflow vector, so V(z) is
determined by the row space of z; enumerations are memoized under the
reduced row echelon form of z, which canonically represents that space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import InputError, InternalCheckError, LimitExceeded
from .graphs import Flow, outflow_vector
from .linprog import (
    affine_solution,
    enumerate_vertices,
    nullspace,
    rat,
    rref,
)
from .words import ExponentMatrix, matrix, validate_Mn

DISC_N_LIMIT = 8
DISC_BOUND_LIMIT = 6
RAY_N_LIMIT = 5
ESSENTIAL_FILTER_THRESHOLD = 1200


@dataclass(frozen=True)
class ConeSpec:
    """Defining rows of a cone on the complete digraph with n vertices."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not validate_Mn(ExponentMatrix(self.n, self.rows)):
            raise InputError("cone rows violate a membership condition")

    def key(self):
        return (self.n, rref(self.rows))


def cone_spec(n, rows) -> ConeSpec:
    m = matrix(n, rows)
    return ConeSpec(m.n, m.rows)


def weight_vector(spec: ConeSpec, f: Flow) -> tuple[Fraction, ...]:
    """One component per defining row: row . outflow_vector(f)."""
    if f.n != spec.n:
        raise InputError("flow dimension does not match cone")
    o = outflow_vector(f)
    return tuple(sum(rat(z) * rat(oj) for z, oj in zip(row, o)) for row in spec.rows)


def in_cone(spec: ConeSpec, f: Flow) -> bool:
    return f.n == spec.n and f.is_conserved() and \
        all(v == 0 for v in weight_vector(spec, f))


def _support_strongly_connected(entries, n: int) -> bool:
    """Strong connectivity of the support digraph of an n x n matrix, with
    the flow fact that weak connectivity suffices verified on the way."""
    adj = [[] for _ in range(n)]
    radj = [[] for _ in range(n)]
    verts = set()
    for i in range(n):
        row = entries[i]
        for j in range(n):
            if row[j]:
                adj[i].append(j)
                radj[j].append(i)
                verts.add(i)
                verts.add(j)
    if not verts:
        return False
    start = next(iter(verts))

    def reach(adjacency):
        seen = {start}
        todo = [start]
        while todo:
            v = todo.pop()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    fwd = reach(adj)
    strong = verts <= fwd and verts <= reach(radj)
    weak = True
    if not strong:
        und = [a + r for a, r in zip(adj, radj)]
        weak = verts <= reach(und)
    if weak != strong:
        # a conserved flow's support cannot be weakly but not strongly
        # connected; reaching this line would falsify that fact
        raise InternalCheckError("flow support weakly but not strongly connected")
    return strong


def is_disc_vector(spec: ConeSpec, f: Flow) -> bool:
    """Nonzero, integral, in the cone, with strongly connected support."""
    return (not f.is_zero() and f.is_integral() and in_cone(spec, f)
            and _support_strongly_connected(f.entries, f.n))


# ---------------------------------------------------------------------------
# Enumeration of disc vectors up to an outflow bound
# ---------------------------------------------------------------------------

def _annihilating_outflows(spec: ConeSpec, bound: int) -> list[tuple[int, ...]]:
    out = []
    for o in product(range(bound + 1), repeat=spec.n):
        if not any(o):
            continue
        if all(sum(z * oj for z, oj in zip(row, o)) == 0 for row in spec.rows):
            out.append(o)
    return out


def _iter_tables(sums: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All nonnegative integer n x n matrices with row sums and column sums
    both equal to `sums`."""
    n = len(sums)
    total = sum(sums)

    def compositions(amount, caps, idx, acc):
        if idx == n - 1:
            if amount <= caps[idx]:
                yield acc + (amount,)
            return
        top = min(amount, caps[idx])
        for v in range(top + 1):
            yield from compositions(amount - v, caps, idx + 1, acc + (v,))

    def rec(i, cols_left, rows_acc, remaining_total):
        if i == n:
            yield tuple(rows_acc)
            return
        after = remaining_total - sums[i]
        for row in compositions(sums[i], cols_left, 0, ()):
            new_cols = tuple(c - v for c, v in zip(cols_left, row))
            if max(new_cols, default=0) > after:
                continue
            rows_acc.append(row)
            yield from rec(i + 1, new_cols, rows_acc, after)
            rows_acc.pop()

    yield from rec(0, sums, [], total)


_DISC_CACHE: dict = {}
_COLUMN_CACHE: dict = {}


def enumerate_disc_vectors(spec: ConeSpec, bound: int,
                           n_limit: int = DISC_N_LIMIT,
                           bound_limit: int = DISC_BOUND_LIMIT) -> tuple[Flow, ...]:
    """Exactly the integral cone members with strongly connected support and
    every outflow <= bound, in a deterministic order."""
    if spec.n > n_limit:
        raise LimitExceeded(f"disc enumeration limited to n <= {n_limit}")
    if bound > bound_limit:
        raise LimitExceeded(f"disc enumeration limited to bound <= {bound_limit}")
    key = (spec.key(), bound)
    hit = _DISC_CACHE.get(key)
    if hit is not None:
        return hit
    n = spec.n
    found = []
    for o in sorted(_annihilating_outflows(spec, bound)):
        for entries in _iter_tables(o):
            if _support_strongly_connected(entries, n):
                found.append(Flow(n, entries))
    result = tuple(found)
    _DISC_CACHE[key] = result
    return result


def _hamiltonian_subcycle_exists(entries, n: int) -> bool:
    """Is there a single directed cycle through all n vertices inside the
    support?  Backtracking; n is small."""
    def extend(v, visited):
        row = entries[v]
        for w in range(n):
            if row[w]:
                if w == 0 and len(visited) == n:
                    return True
                if w not in visited:
                    visited.add(w)
                    if extend(w, visited):
                        return True
                    visited.remove(w)
        return False

    return extend(0, {0})


def _constant_outflows_only(spec: ConeSpec, bound: int) -> bool:
    return all(len(set(o)) == 1
               for o in _annihilating_outflows(spec, bound))


def lp_columns(spec: ConeSpec, bound: int) -> tuple[Flow, ...]:
    """Disc vectors thinned to a set that preserves every packing-LP value.

    Dropping d is sound whenever d = e + v with e a disc vector and v a
    nonzero cone member, since any expression through d rewrites through e
    with the same coefficient sum.  Small sets get the exact essential
    filter; constant-outflow cones get the Hamiltonian-subcycle test; very
    large irregular sets are returned unfiltered (only performance suffers).
    """
    key = (spec.key(), bound)
    hit = _COLUMN_CACHE.get(key)
    if hit is not None:
        return hit
    discs = enumerate_disc_vectors(spec, bound)
    if len(discs) <= ESSENTIAL_FILTER_THRESHOLD:
        mass = {f: sum(v for r in f.entries for v in r) for f in discs}
        by_mass = sorted(discs, key=lambda f: (mass[f], f.entries))
        kept = []
        for d in by_mass:
            dominated = any(mass[e] < mass[d] and e.leq(d) for e in by_mass)
            if not dominated:
                kept.append(d)
        result = tuple(sorted(kept, key=lambda f: f.entries))
    elif _constant_outflows_only(spec, bound):
        kept = []
        for d in discs:
            c = d.outflow(0)
            if c <= 1 or not _hamiltonian_subcycle_exists(d.entries, spec.n):
                kept.append(d)
        result = tuple(kept)
    else:
        result = discs
    _COLUMN_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# Bounded subflow enumeration (shared by essential / extremal checks)
# ---------------------------------------------------------------------------

def _traversal_order(edges: Sequence[tuple[int, int]]) -> list[int]:
    """DFS edge order: chains of degree-two vertices come out consecutive,
    which lets conservation pruning pin their values immediately."""
    out_of: dict[int, list[int]] = {}
    for idx, (t, _h) in enumerate(edges):
        out_of.setdefault(t, []).append(idx)
    unused = set(range(len(edges)))
    order: list[int] = []
    while unused:
        start = min(unused, key=lambda i: edges[i])
        stack = [start]
        while stack:
            idx = stack.pop()
            if idx not in unused:
                continue
            unused.discard(idx)
            order.append(idx)
            head = edges[idx][1]
            for nxt in sorted(out_of.get(head, ()), reverse=True):
                if nxt in unused:
                    stack.append(nxt)
    return order


def iter_bounded_flows(edges: Sequence[tuple[int, int]],
                       caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All integral flows supported on `edges` with value <= cap per edge.

    Yields value tuples aligned with `edges`.  Conservation pruning works
    vertex by vertex through partial net flow and remaining capacity;
    edges are processed in DFS order so chains collapse early.
    """
    original_edges, original_caps = list(edges), list(caps)
    order = _traversal_order(original_edges)
    inverse = [0] * len(order)
    for pos, idx in enumerate(order):
        inverse[idx] = pos
    edges = [original_edges[i] for i in order]
    caps = [original_caps[i] for i in order]
    m = len(edges)
    verts = sorted({v for e in edges for v in e})
    rem_out = {v: 0 for v in verts}
    rem_in = {v: 0 for v in verts}
    for (t, h), c in zip(edges, caps):
        if t != h:
            rem_out[t] += c
            rem_in[h] += c
    net = {v: 0 for v in verts}
    vals = [0] * m

    def rec(idx):
        if idx == m:
            if all(x == 0 for x in net.values()):
                yield tuple(vals[inverse[i]] for i in range(m))
            return
        t, h = edges[idx]
        c = caps[idx]
        if t == h:
            for v in range(c + 1):
                vals[idx] = v
                yield from rec(idx + 1)
            vals[idx] = 0
            return
        rem_out[t] -= c
        rem_in[h] -= c
        for v in range(c + 1):
            vals[idx] = v
            net[t] += v
            net[h] -= v
            if (-rem_out[t] <= net[t] <= rem_in[t]
                    and -rem_out[h] <= net[h] <= rem_in[h]):
                yield from rec(idx + 1)
            net[t] -= v
            net[h] += v
        vals[idx] = 0
        rem_out[t] += c
        rem_in[h] += c

    yield from rec(0)


def _edge_outflows(edges, vals, n):
    o = [0] * n
    for (t, _h), v in zip(edges, vals):
        o[t] += v
    return o


def _vals_in_cone(spec, edges, vals):
    o = _edge_outflows(edges, vals, spec.n)
    return all(sum(z * oj for z, oj in zip(row, o)) == 0 for row in spec.rows)


def _vals_connected(edges, vals) -> bool:
    sup = [(e, v) for e, v in zip(edges, vals) if v]
    if not sup:
        return False
    adj: dict[int, list[int]] = {}
    radj: dict[int, list[int]] = {}
    verts = set()
    for (t, h), _ in sup:
        adj.setdefault(t, []).append(h)
        radj.setdefault(h, []).append(t)
        verts.update((t, h))
    start = next(iter(verts))

    def reach(a):
        seen = {start}
        todo = [start]
        while todo:
            v = todo.pop()
            for w in a.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    return verts <= reach(adj) and verts <= reach(radj)


def is_essential(spec: ConeSpec, d: Flow) -> bool:
    """No way to write d = e + v with e a disc vector and v a nonzero cone
    member.  Any such e satisfies e <= d entrywise, so the search space is
    the finite set of proper nonzero subflows of d."""
    if not is_disc_vector(spec, d):
        raise InputError("essentiality is defined for disc vectors only")
    edges = d.support_edges()
    caps = [int(d.entries[t][h]) for t, h in edges]
    for vals in iter_bounded_flows(edges, caps):
        if not any(vals) or list(vals) == caps:
            continue
        if _vals_in_cone(spec, edges, vals) and _vals_connected(edges, vals):
            return False
    return True


@dataclass(frozen=True)
class ExtremalityReport:
    extremal_up_to: int
    counterexample: Optional[tuple[tuple[tuple[int, ...], ...], ...]] = None
    # counterexample: tuple of summand value-tuples aligned with `edges`
    edges: Optional[tuple[tuple[int, int], ...]] = None

    @property
    def is_extremal(self) -> bool:
        return self.counterexample is None


def is_extremal(spec: ConeSpec, d: Flow, n_max: int = 2) -> ExtremalityReport:
    """Bounded extremality verifier against the ambient integral cone.

    For each N <= n_max it searches decompositions N*d = d_1 + ... + d_N
    with every d_i a nonzero integral cone member entrywise below N*d; the
    first decomposition with some part != d is a counterexample.  This is
    a verifier up to n_max, not a decision procedure.
    """
    if not is_disc_vector(spec, d):
        raise InputError("extremality check expects a disc vector")
    base_edges = d.support_edges()
    for N in range(2, n_max + 1):
        target = [int(d.entries[t][h]) * N for t, h in base_edges]
        members = []
        for vals in iter_bounded_flows(base_edges, target):
            if any(vals) and _vals_in_cone(spec, base_edges, vals):
                members.append(vals)
        members.sort()
        member_set = set(members)
        d_vals = tuple(int(d.entries[t][h]) for t, h in base_edges)

        def search(start, left, remaining, parts):
            # parts are kept nondecreasing to cut permuted duplicates
            if left == 1:
                rem = tuple(remaining)
                if rem in member_set and (not parts or rem >= parts[-1]):
                    full = parts + [rem]
                    if any(p != d_vals for p in full):
                        return full
                return None
            for k in range(start, len(members)):
                e = members[k]
                if all(v <= r for v, r in zip(e, remaining)):
                    nxt = [r - v for r, v in zip(remaining, e)]
                    got = search(k, left - 1, nxt, parts + [e])
                    if got:
                        return got
            return None

        found = search(0, N, target, [])
        if found:
            return ExtremalityReport(extremal_up_to=N - 1,
                                     counterexample=tuple(found),
                                     edges=tuple(base_edges))
    return ExtremalityReport(extremal_up_to=n_max, edges=tuple(base_edges))


# ---------------------------------------------------------------------------
# Extremal rays
# ---------------------------------------------------------------------------

def extremal_rays(spec: ConeSpec, n_limit: int = RAY_N_LIMIT) -> list[Flow]:
    """Primitive integral generators of the extremal rays of the cone.

    The cone is pointed (it sits in the nonnegative orthant), so its rays
    are the vertices of the total-mass-one cross-section; those are found
    by exact vertex enumeration after reducing to the affine hull.
    """
    if spec.n > n_limit:
        raise LimitExceeded(f"ray extraction limited to n <= {n_limit}")
    n = spec.n
    dim = n * n

    def var(i, j):
        return i * n + j

    eq_rows = []
    rhs = []
    for i in range(n):  # conservation: outflow_i - inflow_i = 0
        row = [Fraction(0)] * dim
        for j in range(n):
            row[var(i, j)] += 1
            row[var(j, i)] -= 1
        eq_rows.append(row)
        rhs.append(Fraction(0))
    for zrow in spec.rows:  # weight row: sum_j z_j * outflow_j = 0
        row = [Fraction(0)] * dim
        for j in range(n):
            for k in range(n):
                row[var(j, k)] += zrow[j]
        eq_rows.append(row)
        rhs.append(Fraction(0))
    row = [Fraction(1)] * dim  # cross-section: total mass 1
    eq_rows.append(row)
    rhs.append(Fraction(1))

    x0 = affine_solution(eq_rows, rhs, dim)
    if x0 is None:
        return []
    basis = nullspace(eq_rows, dim)
    d = len(basis)
    # f = x0 + basis . y >= 0   <=>   -(basis_j) . y <= x0_j per coordinate
    ineqs = []
    for coord in range(dim):
        rowv = tuple(-b[coord] for b in basis)
        ineqs.append((rowv, x0[coord]))
    verts = enumerate_vertices(ineqs, d)
    rays = []
    seen = set()
    for y in verts:
        f = [x0[c] + sum(b[c] * yv for b, yv in zip(basis, y)) for c in range(dim)]
        lcm = 1
        for v in f:
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        ints = [int(v * lcm) for v in f]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g:
            ints = [v // g for v in ints]
        entries = tuple(tuple(ints[var(i, j)] for j in range(n)) for i in range(n))
        if entries not in seen:
            seen.add(entries)
            rays.append(Flow(n, entries))
    rays.sort(key=lambda fl: fl.entries)
    return rays
