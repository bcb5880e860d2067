"""Reproduction suites run by ``nilpoly verify``.

Each suite yields :class:`Check` rows; output contains no timings so that two
runs produce identical reports.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterator

from nilpoly.bounded import BoundedForm, classify_orbit_of, scan_bounded_orbits, witness_for_form
from nilpoly.errors import InvalidForm, UnknownSuite
from nilpoly.interpolation import family_from_sequence
from nilpoly.poly import IntPoly, parse_poly
from nilpoly.search import SearchConfig, enumerate_nilpotent_sequences, enumerate_sequences, m_max_formula, max_index_families

SCAN_BOX = dict(deg_max=3, coeff_max=4, r_lo=-6, r_hi=6)
WITNESS_TRIALS = 20
WITNESS_SEED = 20240


@dataclass(frozen=True)
class Check:
    suite: str
    item: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.suite:<15} {self.item:<22} {self.detail}"

    def to_dict(self) -> dict:
        return {"suite": self.suite, "item": self.item, "passed": self.passed, "detail": self.detail}


def load_goldens() -> list[dict]:
    out = []
    for f in sorted(resources.files("nilpoly.goldens").iterdir(), key=lambda p: p.name):
        if f.name.endswith(".json"):
            out.append(json.loads(f.read_text()))
    return sorted(out, key=lambda g: (abs(g["start"]), -g["start"]))


def _fmt(seq) -> str:
    return "{" + ",".join(map(str, seq)) + "}"


def _golden_problems(g: dict, found: list[tuple[int, ...]]) -> list[str]:
    problems = []
    want = {tuple(e["sequence"]) for e in g["families"]}
    got = set(found)
    if want - got:
        problems.append("missing " + " ".join(_fmt(s) for s in sorted(want - got)))
    if got - want:
        problems.append("extra " + " ".join(_fmt(s) for s in sorted(got - want)))
    for e in g["families"]:
        seq = tuple(e["sequence"])
        rep, mod = parse_poly(e["representative"]), parse_poly(e["modulus"])
        fam = family_from_sequence(seq)
        # listed representative and its coset must realize the sequence, and the
        # listed modulus must vanish on every node (so it divides ours)
        for p in (IntPoly(), IntPoly((1,)), IntPoly((0, -1)), IntPoly((2, 0, 1))):
            if not fam.realizes(rep + p * mod) or not fam.realizes(fam.member(p)):
                problems.append(f"coset mismatch at {_fmt(seq)}")
                break
        if mod != IntPoly.from_roots(seq[:-1]):
            problems.append(f"listed modulus of {_fmt(seq)} is not the node product")
    return problems


def suite_classification() -> Iterator[Check]:
    for g in load_goldens():
        r = g["start"]
        found = enumerate_sequences(r)
        problems = _golden_problems(g, found)
        detail = "; ".join(problems) if problems else f"{len(found)} sequences match"
        yield Check("classification", f"start={r}", not problems, detail)


def suite_index_bound() -> Iterator[Check]:
    for a in range(1, 9):
        for r in (a, -a):
            res = enumerate_nilpotent_sequences(SearchConfig(r, a + 3))
            want = m_max_formula(r)
            yield Check("index-bound", f"start={r}", res.max_index_found == want,
                        f"max index {res.max_index_found}, expected {want}")


def suite_nrr_structure() -> Iterator[Check]:
    for a in range(4, 9):
        for r in (a, -a):
            fams = max_index_families(r)
            s = 1 if r > 0 else -1
            stair = tuple(range(r, 0, -s)) + (0,)
            want = {stair}
            if a == 4:
                want.add(tuple(s * v for v in (4, 5, 6, 3, 0)))
            got = {f.sequence for f in fams}
            ok = got == want and all(
                f.interpolant == IntPoly((-s, 1)) for f in fams if f.sequence == stair)
            yield Check("nrr-structure", f"start={r}", ok,
                        f"{len(fams)} families: " + " ".join(_fmt(q) for q in sorted(got)))


def random_form(tag: int, rng: random.Random) -> BoundedForm:
    while True:
        S, R, e = rng.randint(-10, 10), rng.randint(-10, 10), rng.choice((1, -1))
        try:
            return BoundedForm(tag, S, R=R if tag in (2, 5, 6) else None,
                               eps=e if tag in (3, 4, 6, 7) else None)
        except InvalidForm:
            continue


def witness_round_trip(tag: int, trials: int = WITNESS_TRIALS, seed: int = WITNESS_SEED) -> list[BoundedForm]:
    """Forms whose witness does not classify back to themselves."""
    rng = random.Random(seed * 10 + tag)
    bad = []
    for _ in range(trials):
        f = random_form(tag, rng)
        if classify_orbit_of(witness_for_form(f), f.first) != f:
            bad.append(f)
    return bad


def suite_bounded_forms() -> Iterator[Check]:
    rep = scan_bounded_orbits(**SCAN_BOX)
    yield Check("bounded-forms", "scan", not rep.counterexamples,
                f"{rep.bounded} bounded orbits, {len(rep.counterexamples)} counterexamples")
    for tag in range(1, 8):
        bad = witness_round_trip(tag)
        yield Check("bounded-forms", f"witness form {tag}", not bad,
                    f"{WITNESS_TRIALS - len(bad)}/{WITNESS_TRIALS} round trips")


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "classification": suite_classification,
    "index-bound": suite_index_bound,
    "nrr-structure": suite_nrr_structure,
    "bounded-forms": suite_bounded_forms,
}


def verify_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known suites: {', '.join([*SUITES, 'all'])}")
    return list(SUITES[name]())
