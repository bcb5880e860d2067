from __future__ import annotations

import json
import random

import pytest

from nilpoly.errors import DomainError, ZeroStart
from nilpoly.interpolation import family_from_sequence
from nilpoly.orbit import nilpotency_index
from nilpoly.poly import IntPoly, parse_poly
from nilpoly.search import (SearchConfig, brute_force_oracle, c_r, enumerate_nilpotent_sequences,
                            enumerate_sequences, extremal_staircase_poly, fact_zero_description, m_max_formula,
                            max_index_families, staircase_run)


def S(*seqs):
    return set(seqs)


@pytest.mark.parametrize("r, c", [(2, 3), (5, 3), (19, 4), (3, 3), (18, 3), (114, 5), (113, 4)])
def test_c_r(r, c):
    assert c_r(r) == c


def test_c_r_domain():
    with pytest.raises(DomainError):
        c_r(1)


@pytest.mark.parametrize("seq, k", [((2, 3, 4, 5, 0), 3), ((5, 0), 0), ((3, 4, 5, 0), 2), ((1, 2, 3, 0), 2)])
def test_staircase_run(seq, k):
    assert staircase_run(seq) == k


@pytest.mark.parametrize("r, m", [(0, 2), (1, 3), (-1, 3), (2, 4), (-2, 4), (3, 3), (7, 7), (-8, 8)])
def test_m_max_formula(r, m):
    assert m_max_formula(r) == m


def test_start_two():
    got = enumerate_nilpotent_sequences(SearchConfig(2, 6)).sequences
    assert set(got) == S((2, 0), (2, 1, 0), (2, 3, 0), (2, 4, 0), (2, 4, 6, 0), (2, 3, 4, 5, 0))
    assert got == sorted(got)


def test_start_three():
    assert set(enumerate_sequences(3, 6)) == S(
        (3, 0), (3, 2, 0), (3, 6, 0), (3, 4, 0), (3, 2, 1, 0), (3, 4, 2, 0), (3, 4, 5, 0), (3, 2, 4, 0))


def test_start_one():
    assert set(enumerate_sequences(1, 6)) == S((1, 0), (1, 2, 0), (1, 2, 3, 0))


def test_zero_start_rejected():
    with pytest.raises(ZeroStart):
        enumerate_sequences(0)
    d = fact_zero_description()
    assert d["start"] == 0 and d["max_index"] == 2


def test_default_headroom():
    assert SearchConfig(5).max_index == m_max_formula(5) + 2
    with pytest.raises(DomainError):
        SearchConfig(5, 0)


@pytest.mark.parametrize("r", range(1, 9))
def test_reflection_symmetry(r):
    pos = enumerate_sequences(r)
    neg = enumerate_sequences(-r)
    assert {tuple(-v for v in s) for s in pos} == set(neg)


@pytest.mark.parametrize("r", [r for a in range(2, 9) for r in (a, -a)])
def test_staircase_bound_holds(r):
    for s in enumerate_sequences(r, abs(r) + 3):
        run = staircase_run(tuple(v * (1 if r > 0 else -1) for v in s))
        assert run <= c_r(abs(r))


@pytest.mark.parametrize("r", [r for a in range(1, 9) for r in (a, -a)])
def test_index_bound(r):
    res = enumerate_nilpotent_sequences(SearchConfig(r, abs(r) + 3))
    assert res.max_index_found == m_max_formula(r)
    if abs(r) >= 3:
        assert all(len(s) <= abs(r) + 1 for s in res.sequences)
    else:
        assert res.max_index_found == abs(r) + 2


@pytest.mark.parametrize("r", [r for a in range(1, 7) for r in (a, -a)])
def test_pruning_rules_lose_nothing(r):
    cfg = SearchConfig(r, abs(r) + 3)
    full = enumerate_nilpotent_sequences(cfg)
    bare = enumerate_nilpotent_sequences(cfg, staircase_prune=False, prefix_prune=False)
    assert full.sequences == bare.sequences
    assert full.nodes_explored <= bare.nodes_explored


@pytest.mark.parametrize("r", [r for a in range(1, 9) for r in (a, -a)])
def test_every_sequence_is_realized_with_exact_index(r):
    rng = random.Random(r)
    for s in enumerate_sequences(r):
        f = family_from_sequence(s)
        for _ in range(3):
            p = IntPoly([rng.randint(-3, 3) for _ in range(rng.randint(0, 3))])
            assert nilpotency_index(f.member(p), r) == len(s) - 1


def test_extremal_staircase_family():
    r, u = extremal_staircase_poly(3)
    assert (r, u) == (2, parse_poly("-x^3+9x^2-25x+25"))
    assert nilpotency_index(u, 2) == 4
    assert (2, 3, 4, 5, 0) in enumerate_sequences(2)
    r, u = extremal_staircase_poly(4)
    assert r == 19 and nilpotency_index(u, r) == 5
    seqs = enumerate_sequences(19)
    assert (19, 20, 21, 22, 23, 0) in seqs
    assert max(staircase_run(s) for s in seqs) == c_r(19)
    with pytest.raises(DomainError):
        extremal_staircase_poly(2)


def test_max_index_families():
    fams = max_index_families(4)
    assert {f.sequence for f in fams} == S((4, 3, 2, 1, 0), (4, 5, 6, 3, 0))
    (five,) = max_index_families(5)
    assert five.sequence == (5, 4, 3, 2, 1, 0) and five.interpolant == parse_poly("x-1")
    (mfive,) = max_index_families(-5)
    assert mfive.sequence == (-5, -4, -3, -2, -1, 0) and mfive.interpolant == parse_poly("x+1")
    with pytest.raises(DomainError):
        max_index_families(3)


def test_enumeration_json_is_deterministic():
    cfg = SearchConfig(-4, emit_families=True)
    a = json.dumps(enumerate_nilpotent_sequences(cfg).to_dict())
    b = json.dumps(enumerate_nilpotent_sequences(cfg).to_dict())
    assert a == b
    d = json.loads(a)
    assert set(d) == {"start", "sequences", "families", "max_index_found", "nodes_explored"}
    assert len(d["families"]) == len(d["sequences"]) == 8


def test_oracle_examples():
    assert S((1, 0), (1, 2, 0)) <= brute_force_oracle(1, 1, 4, 64)
    # no nonzero constant reaches 0 from 5; the zero constant does, in one step
    assert brute_force_oracle(5, 0, 3, 64) == {(5, 0)}


def test_oracle_finds_reference_cubic():
    # 51^4 polynomials, about 15 s
    assert (2, 3, 4, 5, 0) in brute_force_oracle(2, 3, 25, 64)


@pytest.mark.parametrize("r", [1, -1, 2, -2, 3, -3])
def test_oracle_contained_in_enumeration(r):
    assert brute_force_oracle(r, 2, 6, 64) <= set(enumerate_sequences(r))
