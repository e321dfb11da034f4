import random
from fractions import Fraction

import pytest

from sclflow.bounds import lower_bound, universal_word
from sclflow.cones import cone_spec, in_cone
from sclflow.engine import (
    klein_value,
    pair_flow,
    is_paired,
    scl,
    scl_bracket,
    verify_certificate,
)
from sclflow.errors import InputError, LimitExceeded
from sclflow.graphs import Flow, cycle_flow, zero_flow
from sclflow.words import make_word, parse_word

F = Fraction

SPEC2 = cone_spec(2, [[1, -1]])
SPEC3 = cone_spec(3, [[1, -1, 0], [1, 0, -1]])


def test_pairing_is_entrywise_bijection():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(2, 5)
        f = zero_flow(n)
        for _ in range(rng.randint(1, 3)):
            f = f.add(cycle_flow(n, rng.sample(range(n), rng.randint(1, n))))
        g = pair_flow(f)
        assert is_paired(f, g)
        # total mass is preserved
        assert sum(map(sum, f.entries)) == sum(map(sum, g.entries))
        # the defining identity, index shift by one with wraparound
        for i in range(n):
            for j in range(n):
                assert f.entries[i][j] == g.entries[(j - 1) % n][i]


def test_pairing_inverse_recovers_original():
    # slot correspondence A -> B -> A is the identity
    rng = random.Random(44)
    for _ in range(20):
        n = rng.randint(2, 5)
        f = cycle_flow(n, rng.sample(range(n), rng.randint(1, n)))
        g = pair_flow(f)
        back = Flow(n, tuple(tuple(g.entries[(j - 1) % n][i] for j in range(n))
                             for i in range(n)))
        assert back == f


def test_pairing_of_odd_alternating_cycle():
    # the alternating cycle pairs with the descending cycle
    v_a = cycle_flow(3, [0, 2, 1])
    v_b = pair_flow(v_a)
    assert v_b == cycle_flow(3, [0, 2, 1])


def test_klein_value_single_disc():
    assert klein_value(SPEC2, cycle_flow(2, [0, 1]), 1) == 1


def test_klein_value_homogeneous():
    assert klein_value(SPEC2, cycle_flow(2, [0, 1]).scale(2), 2) == 2


def test_klein_value_two_cycles():
    v = cycle_flow(3, [0, 1, 2]).add(cycle_flow(3, [0, 2, 1]))
    assert klein_value(SPEC3, v, 1) == 2


def test_klein_value_requires_cone_membership():
    with pytest.raises(InputError):
        klein_value(SPEC2, cycle_flow(2, [0]), 1)


def test_scl_commutator():
    res = scl(parse_word("a b a^-1 b^-1"))
    assert res.value == F(1, 2)
    assert res.status == "stabilized"


def test_scl_mixed_generator_word():
    w = parse_word("a1 b1 b2 a1^-1 b1^-1 b2^-1")
    res = scl(w)
    assert res.value == F(1, 2)
    assert verify_certificate(res, w)


def test_scl_universal_words():
    assert scl(universal_word(3)).value == F(1, 2)
    assert scl(universal_word(4)).value == F(7, 6)


def test_scl_monotone_in_bound():
    w = make_word(4, [[-3, 1, 1, 1]], [[-1, 1, -1, 1]])
    values = [scl(w, bound=b, stabilize=False).value for b in (1, 2, 3)]
    assert values[0] >= values[1] >= values[2]


def _random_word(rng, n):
    from sclflow.words import matrix, validate_Mn

    def side():
        while True:
            rows = []
            for _ in range(rng.randint(1, 2)):
                row = [rng.randint(-2, 2) for _ in range(n - 1)]
                row.append(-sum(row))
                rows.append(row)
            m = matrix(n, rows)
            if m.rows and validate_Mn(m):
                return m.rows
    return make_word(n, side(), side())


def test_scl_certificates_on_random_words():
    rng = random.Random(6)
    for _ in range(25):
        w = _random_word(rng, rng.randint(2, 3))
        res = scl(w, bound=2)
        assert verify_certificate(res, w)
        assert lower_bound(w) <= res.value


def test_certificate_on_universal_word():
    w = universal_word(4)
    res = scl(w)
    assert verify_certificate(res, w)
    cert = res.certificate
    n = w.n
    for i in range(n):
        assert cert.v_a.outflow(i) == 1
        assert cert.v_b.outflow(i) == 1
    spec_x = cone_spec(n, w.x.rows)
    spec_y = cone_spec(n, w.y.rows)
    assert in_cone(spec_x, cert.v_a)
    assert in_cone(spec_y, cert.v_b)


def test_scl_bracket_commutator():
    assert scl_bracket(parse_word("a b a^-1 b^-1")) == (F(0), F(1, 2))


def test_scl_bracket_universal():
    assert scl_bracket(universal_word(3)) == (F(1, 2), F(1, 2))
    assert scl_bracket(universal_word(4)) == (F(1), F(7, 6))


def test_scl_size_refusal():
    with pytest.raises(LimitExceeded):
        scl(universal_word(7))


def test_row_span_inclusion_inequality():
    # adding a row shrinks the cone, so the value cannot increase when the
    # spans grow; equality when the extra row is a combination
    base = make_word(3, [[2, -1, -1]], [[1, 1, -2]])
    bigger = make_word(3, [[2, -1, -1], [0, 1, -1]], [[1, 1, -2]])
    for b in (1, 2):
        v_small = scl(base, bound=b, stabilize=False).value
        v_big = scl(bigger, bound=b, stabilize=False).value
        assert v_small <= v_big


def test_span_equal_words_get_equal_values():
    first = make_word(4, [[2, -2, 3, -3], [-3, 1, 1, 1]], [[1, 1, 1, -3]])
    second = make_word(4, [[2, -2, 3, -3], [-3, 1, 1, 1], [5, -3, 2, -4]],
                       [[1, 1, 1, -3]])
    for b in (1, 2):
        assert scl(first, bound=b, stabilize=False).value == \
            scl(second, bound=b, stabilize=False).value


def test_basis_change_leaves_value_unchanged():
    rng = random.Random(12)
    w = universal_word(3)
    rows = [list(r) for r in w.x.rows]
    # row operations that keep the integer span: swap and add
    rows = [rows[1], rows[0]]
    rows[0] = [a + b for a, b in zip(rows[0], rows[1])]
    other = make_word(3, rows, w.y.rows)
    assert scl(other).value == scl(w).value
