import random
from fractions import Fraction
from itertools import combinations, product

import pytest

from sclflow.cones import is_essential
from sclflow.errors import InputError, PromiseViolation
from sclflow.hardness import (
    append_balance,
    build_table,
    collapse,
    decide_small_scl,
    essential_gadget,
    essential_gadget_answer,
    instance,
    instance_from_json,
    instance_to_json,
    j_pair_certificate,
    reduce_ss_to_smallscl,
    small_scl_instance,
    solve_subset,
    table_witness_from_base,
    verify_table_properties,
)
from sclflow.words import render_word

F = Fraction


def brute_ss(vals):
    n = len(vals)
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            if sum(vals[i] for i in idx) == 0:
                return True
    return False


def test_solve_ss_examples():
    assert solve_subset(instance("SS", [1, -1, 3])).answer
    assert solve_subset(instance("SS", [1, 2])).answer is False


def test_solve_ssp_examples():
    assert not solve_subset(instance("SSP", [1, -1])).answer
    assert solve_subset(instance("SSP", [1, -1, 0])).answer


def test_solve_varssp_example():
    assert not solve_subset(instance("VARSSP", [2, -1, -1])).answer
    ans = solve_subset(instance("VARSSP", [2, -1, -1, 0]))
    assert ans.answer and sum(ans.witness) < 4


def test_mixed_promise_violation():
    # SSP false but a weighted solution of weight < n exists
    # (1,1,-2,0,0): wait - find a genuine example by search instead
    found = None
    for vals in product(range(-3, 4), repeat=4):
        if sum(vals) != 0:
            continue
        ssp = solve_subset(instance("SSP", list(vals))).answer
        var = solve_subset(instance("VARSSP", list(vals))).answer
        if ssp != var:
            found = list(vals)
            break
    assert found is not None
    with pytest.raises(PromiseViolation):
        solve_subset(instance("MIXEDSSP", found))


def test_coss():
    assert solve_subset(instance("COSS", [1, 2, 4])).answer
    assert not solve_subset(instance("COSS", [1, -1, 4])).answer


def test_append_balance():
    assert append_balance([1, 2]).vectors == ((1,), (2,), (-3,))
    assert append_balance([1, -1]).vectors == ((1,), (-1,), (0,))


def test_append_balance_equivalence_exhaustive():
    for m in (1, 2, 3, 4):
        for vals in product(range(-3, 4), repeat=m):
            ss = solve_subset(instance("SS", list(vals))).answer
            ssp = solve_subset(append_balance(list(vals))).answer
            assert ss == ssp


def test_complement_lemma_exhaustive():
    # proper-subset answer on a zero-sum list equals the subset answer on
    # the list with its last entry dropped
    for m in (2, 3, 4):
        for vals in product(range(-3, 4), repeat=m - 1):
            full = list(vals) + [-sum(vals)]
            ssp = solve_subset(instance("SSP", full)).answer
            ss = solve_subset(instance("SS", full[:-1])).answer
            assert ssp == ss


def test_build_table_matches_hand_instance():
    t = build_table([1, -1], 1)
    assert t.columns == (
        (1, -1, -1, 0, -1),
        (-1, -1, 0, -1, -1),
        (0, -1, -1, 0, 0),
        (0, -1, 0, -1, 0),
        (0, 2, 1, 1, 1),
        (0, 2, 1, 1, 1),
    )


def test_build_table_row_sums_zero():
    t = build_table([1, -1, 2, -2], 3)
    k = len(t.columns[0])
    for row in range(k):
        assert sum(c[row] for c in t.columns) == 0


def test_table_with_no_solution():
    for r in (1,):
        t = build_table([1, -1], r)
        assert verify_table_properties(t) == []


def test_table_witness_properties():
    t = build_table([1, -1, 2, -2], 2)
    reports = verify_table_properties(t)
    assert reports
    for rep in reports:
        assert rep.all_hold()


def test_table_witness_lift():
    # mu = (1,1,0,0) kills the base row with weight 2, so it lifts at r = 2
    t = build_table([1, -1, 2, -2], 2)
    lam = table_witness_from_base(t, [1, 1, 0, 0])
    assert sum(lam) < len(t.columns)
    with pytest.raises(InputError):
        table_witness_from_base(t, [1, 1, 1, 0])  # weight 3 != r


def test_build_table_input_validation():
    with pytest.raises(InputError):
        build_table([1, 1], 1)  # not zero-sum
    with pytest.raises(InputError):
        build_table([1, -1], 2)  # r out of range


def test_collapse_identity_for_scalars():
    assert collapse([[3], [-1], [5]], 4) == [3, -1, 5]


def test_collapse_preserves_answers_exhaustive():
    rng = random.Random(10)
    for _ in range(150):
        k = rng.randint(1, 3)
        n = rng.randint(2, 4)
        vectors = [[rng.randint(-2, 2) for _ in range(k)] for _ in range(n)]
        ints = collapse(vectors, n)
        for variant in ("SS",):
            a = solve_subset(instance(variant, vectors)).answer
            b = solve_subset(instance(variant, ints)).answer
            assert a == b
        # zero-sum inputs also compare the proper and weighted variants
        if all(sum(v[c] for v in vectors) == 0 for c in range(k)):
            for variant in ("SSP", "VARSSP"):
                a = solve_subset(instance(variant, vectors)).answer
                b = solve_subset(instance(variant, ints)).answer
                assert a == b


def test_collapse_on_tables_preserves_mixed_answer():
    for vals in ([1, -1], [1, -1, 2], [2, -1, -1]):
        balanced = append_balance(vals)
        base = [v[0] for v in balanced.vectors]
        n = len(base)
        for r in range(1, n):
            t = build_table(base, r)
            collapsed = collapse(t.columns, 2 * n + 2)
            a = solve_subset(t.to_instance("SSP")).answer
            b = solve_subset(instance("SSP", collapsed)).answer
            assert a == b


def test_small_scl_instance_words():
    assert render_word(small_scl_instance([1, -1])) == "a b a^-1 b^-1"
    assert render_word(small_scl_instance([2, -1, -1])) == "a^2 b a^-1 b a^-1 b^-2"
    with pytest.raises(InputError):
        small_scl_instance([1, 0, -1])
    with pytest.raises(InputError):
        small_scl_instance([1, 1])


def test_j_pair_certificate_example():
    cert = j_pair_certificate([1, 1, -1, -1, 2, -2], [0, 2])
    assert cert.count == 6
    assert cert.certified_upper == F(23, 12)
    # v_A decomposes into 2N unit-weight-over-N disc parts
    assert len(cert.parts_a) == 12


def test_j_pair_rejects_adjacent_pair():
    with pytest.raises(InputError):
        j_pair_certificate([1, -1, 3, -3], [0, 1])
    with pytest.raises(InputError):
        j_pair_certificate([3, -3, 1, -1], [0, 1])


def test_j_pair_certificate_bounds_lp_value():
    from sclflow.engine import scl

    xs = (1, 2, -1, -2)
    cert = j_pair_certificate(xs, (0, 2))
    w = small_scl_instance(list(xs))
    value = scl(w, bound=2, stabilize=False).value
    assert value <= cert.certified_upper


def test_decide_small_scl_routes():
    assert decide_small_scl([1, -1, 3, -3]).route == "precheck"
    d = decide_small_scl([1, 2, -1, -2])
    assert d.answer and d.route == "jpair"
    d = decide_small_scl([1, 2, 4, -7])
    assert not d.answer and d.route == "lower-bound"


def test_reduction_driver_matches_brute_force():
    rng = random.Random(14)
    for _ in range(40):
        m = rng.randint(1, 3)
        vals = [rng.randint(-3, 3) for _ in range(m)]
        transcript = reduce_ss_to_smallscl(vals)
        assert transcript.answer == brute_ss(vals)
        data = transcript.to_json()
        assert data["answer"] == transcript.answer
        assert len(data["steps"]) == len(transcript.steps)


def test_reduction_driver_brute_route_for_long_inputs():
    vals = [1, -2, 3, -2]
    transcript = reduce_ss_to_smallscl(vals, scl_path_max_m=3)
    assert transcript.answer == brute_ss(vals)
    assert all(s.route == "brute" for s in transcript.steps)


def test_essential_gadget_structure():
    g = essential_gadget([2, -1])
    assert g.balanced == (2, -1, -1)
    assert g.spec.n == 8
    assert is_essential(g.spec, g.disc)


def test_essential_gadget_answers():
    assert essential_gadget_answer([2, -1]) is True
    assert essential_gadget_answer([1, -1, 3]) is False
    assert essential_gadget_answer([0]) is False
    assert essential_gadget_answer([1, -1]) is False  # balance entry is zero


def test_instance_json_round_trip():
    inst = instance("VARSSP", [[1, 0], [-1, 1], [0, -1]])
    assert instance_from_json(instance_to_json(inst)) == inst
