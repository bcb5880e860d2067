from __future__ import annotations

import random
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilpoly.bounded import (ALTERNATING_ZERO, ONE_ZERO_TAIL, BoundedForm, EventualOrbit, classify_bounded,
                             classify_orbit_of, eventual_orbit, pattern_point_map, recurring_pattern_check,
                             scan_bounded_orbits, witness_for_form)
from nilpoly.errors import DomainError, InvalidForm, NonMinimalInput, NotRealizable
from nilpoly.interpolation import realizable_by_int_poly
from nilpoly.orbit import is_recurringly_nilpotent, nilpotency_index
from nilpoly.poly import IntPoly, compose, negate_reflect, parse_poly
from nilpoly.verify import random_form, witness_round_trip

P = parse_poly


def box(deg_max: int, coeff_max: int):
    rng = range(-coeff_max, coeff_max + 1)
    return [IntPoly(c) for c in product(rng, repeat=deg_max + 1)]


# ---- templates -------------------------------------------------------------

def test_classify_template_examples():
    assert classify_bounded(EventualOrbit((6, 7), (5,))) == BoundedForm(3, 5, eps=1)
    assert classify_bounded(EventualOrbit((2, 1), (0, 3))) == BoundedForm(7, 0, eps=1)
    assert classify_bounded(EventualOrbit((), (4, 9))) == BoundedForm(5, 4, R=9)
    assert classify_bounded(EventualOrbit((), (4,))) == BoundedForm(1, 4)
    assert classify_bounded(EventualOrbit((9,), (4,))) == BoundedForm(2, 4, R=9)
    assert classify_bounded(EventualOrbit((3, 1), (5,))) == BoundedForm(4, 5, eps=-1)
    assert classify_bounded(EventualOrbit((6,), (5, 9))) == BoundedForm(6, 5, R=9, eps=1)


def test_unmatched_orbit_shapes():
    assert classify_bounded(EventualOrbit((1, 2, 3), (4,))) is None
    assert classify_bounded(EventualOrbit((), (1, 2, 3))) is None
    assert classify_bounded(EventualOrbit((8,), (5, 9))) is None


def test_minimality_is_enforced():
    with pytest.raises(NonMinimalInput):
        classify_bounded(EventualOrbit((5,), (3, 5)))
    with pytest.raises(NonMinimalInput):
        classify_bounded(EventualOrbit((), (3, 3)))
    with pytest.raises(NonMinimalInput):
        EventualOrbit.normalized((1,), ())


def test_normalization():
    assert EventualOrbit.normalized((1, 2, 3), (4, 3)) == EventualOrbit((1, 2), (3, 4))
    assert EventualOrbit.normalized((), (7, 7, 7)) == EventualOrbit((), (7,))
    assert EventualOrbit.normalized((1, 4), (2, 4, 2, 4)) == EventualOrbit((1,), (4, 2))


@pytest.mark.parametrize("kwargs", [
    dict(tag=0, S=1), dict(tag=8, S=1), dict(tag=1, S=1, R=2), dict(tag=2, S=1),
    dict(tag=3, S=1), dict(tag=3, S=1, eps=2), dict(tag=5, S=1, R=1), dict(tag=6, S=1, R=2, eps=1),
    dict(tag=7, S=1, R=3, eps=1),
])
def test_invalid_forms(kwargs):
    with pytest.raises(InvalidForm):
        BoundedForm(**kwargs)


def test_form_json():
    assert BoundedForm(7, 3, eps=-1).to_dict() == {"form": 7, "S": 3, "eps": -1}
    assert BoundedForm(5, 4, R=9).to_dict() == {"form": 5, "S": 4, "R": 9}


# ---- witnesses -------------------------------------------------------------

def test_witness_examples():
    assert witness_for_form(BoundedForm(1, 8)) == IntPoly.x()
    for S, R in [(4, 9), (-3, 7), (0, -2)]:
        assert witness_for_form(BoundedForm(5, S, R=R)) == IntPoly((S + R, -1))
    w = witness_for_form(BoundedForm(7, 0, eps=1))
    ref = P("x^2-2x+1") * P("3-x")
    assert all(w(x) == ref(x) for x in (2, 1, 0, 3))


@pytest.mark.parametrize("tag", range(1, 8))
def test_witness_round_trip(tag):
    assert witness_round_trip(tag, trials=50, seed=7) == []


@pytest.mark.parametrize("tag", range(1, 8))
def test_witness_orbit_matches_pattern(tag):
    rng = random.Random(tag)
    for _ in range(10):
        f = random_form(tag, rng)
        pre, cyc = f.pattern()
        o = eventual_orbit(witness_for_form(f), f.first)
        assert (o.preperiod, o.cycle) == (pre, cyc)


# ---- orbits of polynomials -------------------------------------------------

def test_classify_orbit_examples():
    # orbit 1, 2, 3, 0, 3, 0, ...: S = 3, eps = -1 in the template parameters
    assert classify_orbit_of(P("-x^3+4x^2-4x+3"), 1) == BoundedForm(7, 3, eps=-1)
    assert classify_orbit_of(P("x^2-2x+1") * P("3-x"), 2) == BoundedForm(7, 0, eps=1)
    assert classify_orbit_of(P("x^2-4x"), 3) is None
    assert classify_orbit_of(P("13-x"), 4) == BoundedForm(5, 4, R=9)


def test_nilpotent_orbit_continues_past_zero():
    # x - 1 leaves 0 for good
    assert eventual_orbit(P("x-1"), 5) is None
    # x^2 - 1 from 2 is unbounded; from 1 it falls into the cycle 0, -1
    assert eventual_orbit(P("x^2-1"), 1) == EventualOrbit((1,), (0, -1))
    assert eventual_orbit(P("x^2-2x"), 2) == EventualOrbit((2,), (0,))


def test_scan_tiny_linear_box():
    rep = scan_bounded_orbits(1, 1, -2, 2)
    assert rep.polynomials == 9 and rep.orbits == 45
    assert not rep.counterexamples
    assert {t for t, n in rep.form_counts.items() if n} <= {1, 2, 5}


def test_scan_constants():
    rep = scan_bounded_orbits(0, 2, -1, 1)
    assert rep.unbounded == 0 and not rep.counterexamples
    assert {t for t, n in rep.form_counts.items() if n} <= {1, 2}
    assert rep.form_counts[1] + rep.form_counts[2] == rep.orbits == 15


def test_scan_workers_merge_identically():
    a = scan_bounded_orbits(2, 3, -4, 4, workers=1).to_dict()
    b = scan_bounded_orbits(2, 3, -4, 4, workers=2).to_dict()
    assert a == b


def test_scan_rejects_empty_box():
    with pytest.raises(DomainError):
        scan_bounded_orbits(1, 1, 3, 2)


def test_classify_raises_on_impossible_orbit(monkeypatch):
    import nilpoly.bounded as b
    monkeypatch.setattr(b, "eventual_orbit", lambda u, r: EventualOrbit((), (1, 2, 3)))
    with pytest.raises(NotRealizable):
        b.classify_orbit_of(IntPoly.x(), 1)


def _shift(u: IntPoly, t: int) -> IntPoly:
    return compose(u, IntPoly((t, 1))) - IntPoly((t,))


def _shifted(f: BoundedForm, t: int) -> BoundedForm:
    return BoundedForm(f.tag, f.S - t, R=None if f.R is None else f.R - t, eps=f.eps)


def _reflected(f: BoundedForm) -> BoundedForm:
    return BoundedForm(f.tag, -f.S, R=None if f.R is None else -f.R, eps=None if f.eps is None else -f.eps)


@given(st.lists(st.integers(-4, 4), max_size=4).map(IntPoly), st.integers(-6, 6), st.integers(-5, 5))
def test_shift_equivariance(u, r, t):
    f = classify_orbit_of(u, r)
    g = classify_orbit_of(_shift(u, t), r - t)
    assert (f is None) == (g is None)
    if f is not None:
        assert g == _shifted(f, t)


def test_reflection_duality_on_scan_box():
    for u in box(3, 4):
        v = negate_reflect(u)
        for r in range(-6, 7):
            f = classify_orbit_of(u, r)
            g = classify_orbit_of(v, -r)
            assert (f is None) == (g is None)
            if f is not None:
                assert g == _reflected(f)


def test_recurring_nilpotence_matches_zero_in_cycle():
    for u in box(3, 4):
        for r in range(-6, 7):
            if nilpotency_index(u, r) is None:
                continue
            o = eventual_orbit(u, r)
            assert is_recurringly_nilpotent(u, r) == (o is not None and 0 in o.cycle)


# ---- recurring patterns ----------------------------------------------------

def test_recurring_examples():
    assert recurring_pattern_check(2, ONE_ZERO_TAIL, [1, 2]) is not None
    assert recurring_pattern_check(3, ONE_ZERO_TAIL, [1, 2, 3]) is None
    assert recurring_pattern_check(3, ALTERNATING_ZERO, [1, 2, 3], 3) == P("-x^3+4x^2-4x+3")


@pytest.mark.parametrize("prefix", list(permutations([-3, -2, -1, 1, 2, 3], 3)))
def test_long_one_zero_tails_never_realizable(prefix):
    assert recurring_pattern_check(3, ONE_ZERO_TAIL, list(prefix)) is None


def test_recurring_witnesses_produce_their_pattern():
    for kind, prefix, s in [(ONE_ZERO_TAIL, [2, 4], None), (ONE_ZERO_TAIL, [-1, -2], None),
                            (ALTERNATING_ZERO, [-1, -2, -3], -3), (ALTERNATING_ZERO, [2, 1], 3),
                            (ALTERNATING_ZERO, [5, 6], 6), (ALTERNATING_ZERO, [1], 7)]:
        u = recurring_pattern_check(len(prefix), kind, prefix, s)
        want = list(prefix) + ([0, 0, 0] if s is None else [0, s, 0])
        x, got = prefix[0], [prefix[0]]
        for _ in range(len(want) - 1):
            x = u(x)
            got.append(x)
        assert got == want, (kind, prefix, s)
        assert is_recurringly_nilpotent(u, prefix[0])


def test_case_rules_agree_with_interpolation():
    vals = [v for v in range(-5, 6) if v]
    for m in range(4):
        for prefix in permutations(vals, m):
            for kind, recs in ((ONE_ZERO_TAIL, [None]), (ALTERNATING_ZERO, vals)):
                for s in recs:
                    pm = pattern_point_map(kind, prefix, s)
                    direct = pm is not None and realizable_by_int_poly(pm) is not None
                    assert (recurring_pattern_check(m, kind, prefix, s) is not None) == direct


@pytest.mark.parametrize("args", [
    (2, ONE_ZERO_TAIL, [1]),
    (1, "spiral", [1]),
    (1, ONE_ZERO_TAIL, [0]),
    (1, ALTERNATING_ZERO, [1]),
    (1, ALTERNATING_ZERO, [1], 0),
    (1, ONE_ZERO_TAIL, [1], 3),
])
def test_recurring_argument_errors(args):
    with pytest.raises(DomainError):
        recurring_pattern_check(*args)
