import random
from fractions import Fraction

import pytest

from sclflow.cones import (
    cone_spec,
    enumerate_disc_vectors,
    extremal_rays,
    in_cone,
    is_disc_vector,
    is_essential,
    is_extremal,
    iter_bounded_flows,
    lp_columns,
    weight_vector,
)
from sclflow.errors import LimitExceeded
from sclflow.graphs import Flow, abstract_graph, cycle_flow, isomorphic, mdgraph, zero_flow
from sclflow.linprog import make_lp, solve_lp


SPEC2 = cone_spec(2, [[1, -1]])
SPEC3 = cone_spec(3, [[1, -1, 0], [1, 0, -1]])


def loop_flow(n, v):
    return cycle_flow(n, [v])


def test_weight_vector_examples():
    assert weight_vector(SPEC2, cycle_flow(2, [0, 1])) == (0,)
    spec = cone_spec(3, [[2, -1, -1]])
    assert weight_vector(spec, cycle_flow(3, [0, 1, 2])) == (0,)
    assert weight_vector(SPEC2, loop_flow(2, 0)) == (1,)


def test_in_cone_examples():
    assert in_cone(SPEC2, cycle_flow(2, [0, 1]))
    assert in_cone(cone_spec(3, [[2, -1, -1]]), cycle_flow(3, [0, 1, 2]))
    assert not in_cone(SPEC2, loop_flow(2, 0))


def test_disc_enumeration_bound_one():
    discs = enumerate_disc_vectors(SPEC2, 1)
    assert [d.entries for d in discs] == [((0, 1), (1, 0))]


def test_disc_enumeration_bound_two():
    entries = {d.entries for d in enumerate_disc_vectors(SPEC2, 2)}
    assert ((0, 2), (2, 0)) in entries       # twice the two-cycle
    assert ((1, 1), (1, 1)) in entries       # two-cycle plus both loops
    assert ((1, 0), (0, 1)) not in entries   # loop pair: support not connected


def test_disc_enumeration_hamiltonian_cones():
    discs = enumerate_disc_vectors(SPEC3, 1)
    assert len(discs) == 2
    assert all(all(d.outflow(i) == 1 for i in range(3)) for d in discs)


def test_disc_enumeration_monotone_in_bound():
    rng = random.Random(8)
    for rows in ([[1, -1]], [[2, -1, -1]], [[1, 1, -2]], [[1, -1, 0], [1, 0, -1]]):
        spec = cone_spec(len(rows[0]), rows)
        small = set(d.entries for d in enumerate_disc_vectors(spec, 1))
        large = set(d.entries for d in enumerate_disc_vectors(spec, 2))
        assert small <= large


def test_disc_enumeration_limits():
    with pytest.raises(LimitExceeded):
        enumerate_disc_vectors(SPEC2, 7)


def test_every_disc_passes_membership():
    for rows in ([[2, -1, -1]], [[1, 1, -2]], [[1, -1, 2, -2]]):
        spec = cone_spec(len(rows[0]), rows)
        for d in enumerate_disc_vectors(spec, 2):
            assert is_disc_vector(spec, d)


def test_lp_columns_preserve_klein_values():
    # dropping dominated disc vectors must not change any packing optimum
    from sclflow.engine import klein_value

    spec = cone_spec(3, [[1, 1, -2]])
    full = enumerate_disc_vectors(spec, 2)
    cols = lp_columns(spec, 2)
    assert set(cols) <= set(full)
    rng = random.Random(5)
    for _ in range(10):
        v = zero_flow(3)
        for _ in range(rng.randint(1, 3)):
            d = full[rng.randrange(len(full))]
            v = v.add(d)
        kv = klein_value(spec, v, 2)
        # oracle: the LP over the unfiltered column set
        n = 3
        ineq = []
        for i in range(n):
            for j in range(n):
                row = [Fraction(int(d.entries[i][j])) for d in full]
                ineq.append((row, Fraction(v.entries[i][j])))
        res = solve_lp(make_lp([1] * len(full), ineq=ineq))
        assert res.value == kv


def test_is_essential_minimal_vector():
    assert is_essential(SPEC2, cycle_flow(2, [0, 1]))


def test_is_essential_decomposable_vector():
    d = Flow(2, ((1, 1), (1, 1)))  # two-cycle + both loops
    assert not is_essential(SPEC2, d)


def test_is_extremal_two_cycle():
    rep = is_extremal(SPEC2, cycle_flow(2, [0, 1]), n_max=3)
    assert rep.is_extremal and rep.extremal_up_to == 3


def test_is_extremal_doubled_vector():
    rep = is_extremal(SPEC2, Flow(2, ((0, 2), (2, 0))), n_max=2)
    assert not rep.is_extremal
    assert rep.counterexample is not None


def test_extremal_implies_essential_small():
    for rows in ([[1, -1]], [[2, -1, -1]], [[1, 1, -2]]):
        spec = cone_spec(len(rows[0]), rows)
        for d in enumerate_disc_vectors(spec, 2):
            if is_extremal(spec, d, n_max=2).is_extremal:
                assert is_essential(spec, d)


def test_extremal_rays_two_blocks():
    rays = extremal_rays(SPEC2)
    entries = {r.entries for r in rays}
    assert ((0, 1), (1, 0)) in entries  # the two-cycle
    assert ((1, 0), (0, 1)) in entries  # the loop pair
    for r in rays:
        assert in_cone(SPEC2, r)


def test_extremal_rays_equal_outflow_cone():
    rays = extremal_rays(SPEC3)
    assert rays
    for r in rays:
        flows = [r.outflow(i) for i in range(3)]
        assert len(set(flows)) == 1


def test_extremal_rays_scaling_stays_in_cone():
    for rows in ([[1, -1]], [[2, -1, -1]]):
        spec = cone_spec(len(rows[0]), rows)
        for r in extremal_rays(spec):
            assert in_cone(spec, r.scale(3))


def test_ray_not_a_combination_of_others():
    # LP feasibility: no ray is a nonnegative combination of the rest
    spec = cone_spec(3, [[2, -1, -1]])
    rays = extremal_rays(spec)
    n = spec.n
    for k, target in enumerate(rays):
        others = [r for i, r in enumerate(rays) if i != k]
        if not others:
            continue
        eq = []
        for i in range(n):
            for j in range(n):
                row = [Fraction(int(r.entries[i][j])) for r in others]
                eq.append((row, Fraction(target.entries[i][j])))
        res = solve_lp(make_lp([0] * len(others), eq=eq))
        assert res.status == "infeasible"


def test_ray_limit_refusal():
    with pytest.raises(LimitExceeded):
        extremal_rays(cone_spec(6, [[1, -1, 0, 0, 0, 0], [1, 0, -1, 0, 0, 0],
                                    [1, 0, 0, -1, 0, 0], [1, 0, 0, 0, -1, 0],
                                    [1, 0, 0, 0, 0, -1]]))


def test_iter_bounded_flows_conservation():
    edges = [(0, 1), (1, 0), (0, 0)]
    caps = [2, 2, 1]
    flows = list(iter_bounded_flows(edges, caps))
    # all (a, a, c) with a <= 2, loop free
    assert sorted(flows) == sorted((a, a, c) for a in range(3) for c in range(2))


def test_ray_component_shapes_fall_into_three_classes():
    # every ray is a union of at most two embedded cycles, so each
    # connected piece abstracts to a loop, two loops at one vertex, or two
    # cycles sharing a path
    from sclflow.acceptance import _connected_pieces

    loop = mdgraph(1, [(0, 0)])
    wedge = mdgraph(1, [(0, 0), (0, 0)])
    theta = mdgraph(2, [(0, 1), (0, 1), (1, 0)])
    shapes = [loop, wedge, theta]
    for rows in ([[1, -1]], [[2, -1, -1]], [[1, 1, -2]], [[1, -1, 2, -2]],
                 [[1, 1, -1, -1]]):
        spec = cone_spec(len(rows[0]), rows)
        for r in extremal_rays(spec):
            for piece in _connected_pieces(r):
                assert any(isomorphic(piece, s) for s in shapes)


def test_ray_with_two_cycles_sharing_a_path_exists():
    # at four vertices a cycle pair sharing an edge spans a ray; its
    # abstract support is the two-vertex theta shape
    theta = mdgraph(2, [(0, 1), (0, 1), (1, 0)])
    spec = cone_spec(4, [[1, -1, 2, -2]])
    found = False
    for r in extremal_rays(spec):
        g = abstract_graph(r.support_graph())
        if isomorphic(mdgraph(g.vertex_count, g.edges), theta):
            found = True
    assert found


def test_intersection_cone_has_all_loops_ray():
    # the cone cut out by a full set of weight rows is the equal-outflow
    # cone; the identity flow (one loop per vertex) is one of its rays, a
    # shape beyond the three single-weight classes
    rays = extremal_rays(SPEC3)
    assert ((1, 0, 0), (0, 1, 0), (0, 0, 1)) in {r.entries for r in rays}
