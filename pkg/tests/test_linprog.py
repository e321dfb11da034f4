"""Exact LP solver against brute-force vertex enumeration and hand oracles."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sclflow.errors import InputError, LimitExceeded
from sclflow.linprog import (
    enumerate_vertices,
    make_lp,
    rat_from_json,
    rat_to_json,
    rref,
    solve_lp,
)

F = Fraction


def test_single_binding_constraint():
    lp = make_lp([1], ineq=[([1], 3)])
    res = solve_lp(lp)
    assert res.status == "optimal"
    assert res.value == 3
    assert res.witness == (F(3),)


def test_two_var_polytope_optimum():
    # brute-force vertex oracle for {x+2y<=4, x<=2, x,y>=0}:
    # vertices (0,0),(2,0),(0,2),(2,1); max x+y = 3 at (2,1)
    lp = make_lp([1, 1], ineq=[([1, 2], 4), ([1, 0], 2)])
    res = solve_lp(lp)
    assert res.status == "optimal"
    assert res.value == 3
    assert res.witness == (F(2), F(1))


def test_unbounded():
    lp = make_lp([1])
    assert solve_lp(lp).status == "unbounded"


def test_infeasible():
    lp = make_lp([1], ineq=[([1], -1)])  # x <= -1, x >= 0
    assert solve_lp(lp).status == "infeasible"


def test_equality_constraints_and_free_vars():
    # max x + y with x + y = 1, y free, x >= 0, y <= 0 via ineq
    lp = make_lp([1, 2], eq=[([1, 1], 1)], ineq=[([0, 1], 0)],
                 nonneg=[True, False])
    res = solve_lp(lp)
    assert res.status == "optimal"
    assert res.value == 1  # y pushed to 0, x = 1
    assert res.witness == (F(1), F(0))


def test_dimension_mismatch_raises():
    with pytest.raises(InputError):
        solve_lp(make_lp([1, 2], ineq=[([1], 1)]))


def test_degenerate_empty_objective():
    lp = make_lp([0, 0], ineq=[([1, 1], 5)])
    res = solve_lp(lp)
    assert res.status == "optimal"
    assert res.value == 0
    assert res.witness == (F(0), F(0))


def test_vertices_unit_square():
    cons = [([1, 0], 1), ([0, 1], 1), ([-1, 0], 0), ([0, -1], 0)]
    verts = enumerate_vertices(cons, 2)
    assert set(verts) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_vertices_triangle():
    cons = [([-1, 0], 0), ([0, -1], 0), ([1, 1], 1)]
    assert len(enumerate_vertices(cons, 2)) == 3


def test_vertices_dimension_refusal():
    with pytest.raises(LimitExceeded):
        enumerate_vertices([([1] * 13, 1)], 13)


def _random_bounded_lp(rng, nvars, ncons):
    rows = []
    for _ in range(ncons):
        rows.append(([rng.randint(-3, 3) for _ in range(nvars)], rng.randint(1, 6)))
    # box rows keep the region bounded; origin stays feasible (rhs > 0)
    for i in range(nvars):
        row = [0] * nvars
        row[i] = 1
        rows.append((row, rng.randint(1, 4)))
    obj = [rng.randint(-3, 3) for _ in range(nvars)]
    return obj, rows


def test_simplex_equals_vertex_enumeration_on_random_lps():
    rng = random.Random(20240)
    for _ in range(40):
        nvars = rng.randint(2, 4)
        obj, rows = _random_bounded_lp(rng, nvars, rng.randint(1, 6))
        res = solve_lp(make_lp(obj, ineq=rows))
        cons = list(rows) + [([-1 if j == i else 0 for j in range(nvars)], 0)
                             for i in range(nvars)]
        verts = enumerate_vertices(cons, nvars)
        assert verts, "bounded nonempty polytope must have vertices"
        best = max(sum(F(c) * v for c, v in zip(obj, vert)) for vert in verts)
        assert res.status == "optimal"
        assert res.value == best
        # witness feasibility, exactly
        for row, b in rows:
            assert sum(F(c) * w for c, w in zip(row, res.witness)) <= b
        assert all(w >= 0 for w in res.witness)


def test_duals_certify_optimum():
    rng = random.Random(7)
    for _ in range(25):
        nvars = rng.randint(2, 4)
        obj, rows = _random_bounded_lp(rng, nvars, rng.randint(1, 5))
        lp = make_lp(obj, ineq=rows)
        res = solve_lp(lp)
        assert res.status == "optimal"
        y = res.ineq_duals
        assert all(v >= 0 for v in y)
        # weak duality: y . b >= optimum, with equality at the optimum
        dual_val = sum(v * b for v, (_, b) in zip(y, lp.ineq_constraints))
        assert dual_val == res.value
        # dual feasibility on nonnegative variables: y^T A >= c
        for j in range(nvars):
            colsum = sum(v * row[j] for v, (row, _) in zip(y, lp.ineq_constraints))
            assert colsum >= F(obj[j])


def test_vertices_are_the_optimum_attaining_points():
    # random bounded 3-D system: over many random objectives the simplex
    # optima sweep out exactly the vertex set
    rng = random.Random(3111)
    rows = [([rng.randint(-3, 3) for _ in range(3)], rng.randint(1, 5))
            for _ in range(6)]
    rows += [([1 if j == i else 0 for j in range(3)], 3) for i in range(3)]
    cons = rows + [([-1 if j == i else 0 for j in range(3)], 0)
                   for i in range(3)]
    verts = set(enumerate_vertices(cons, 3))
    attained = set()
    for _ in range(50):
        obj = [rng.randint(-5, 5) for _ in range(3)]
        res = solve_lp(make_lp(obj, ineq=rows))
        assert res.status == "optimal"
        attained.add(res.witness)
    assert attained <= verts
    assert attained == verts  # frozen: this seed covers every vertex


def test_rational_json_roundtrip():
    for x in [F(0), F(7, 6), F(-119, 142), F(10**30, 7)]:
        assert rat_from_json(rat_to_json(x)) == x
        obj = rat_to_json(x)
        assert set(obj) == {"num", "den"} and int(obj["den"]) > 0


@given(st.integers(-10**9, 10**9), st.integers(1, 10**9), st.integers(1, 1000))
def test_rational_normalization(a, b, c):
    # same ratio, same value, positive denominator, lowest terms
    x, y = Fraction(a, b), Fraction(a * c, b * c)
    assert x == y
    assert y.denominator > 0
    from math import gcd
    assert gcd(abs(y.numerator), y.denominator) == 1


def test_rref_canonicalizes_row_space():
    a = rref([[1, -1, 0], [1, 0, -1]])
    b = rref([[2, -1, -1], [1, 0, -1], [3, -1, -2]])
    assert a == b
