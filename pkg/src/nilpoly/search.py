"""Enumeration of nilpotent sequences ``(r, r_1, ..., r_{m-1}, 0)`` at a start ``r``.

A sequence is realizable by an integer polynomial iff its point map
``r_i -> r_{i+1}`` has an integral interpolant.  The search walks successive
steps ``d_k = r_{k+1} - r_k`` subject to necessary conditions:

* ``d_k`` divides ``r_k`` (the remaining steps sum to ``-r_k`` and are all
  multiples of ``d_k``);
* ``d_{k-1}`` divides ``d_k``;
* orbit values are distinct and nonzero before the final 0;
* for ``|r| >= 2`` the initial run of ``+sgn(r)`` steps is at most ``c_r(|r|)``;
* every prefix map must itself be realizable.

Leaves are accepted only after the exact interpolation test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial

from nilpoly.errors import DomainError, ZeroStart
from nilpoly.interpolation import IntegralNewton, SequenceFamily, family_from_sequence, realizable_by_int_poly
from nilpoly.poly import IntPoly, divisors

Sequence_ = tuple[int, ...]


def c_r(r: int) -> int:
    """Largest ``s >= 0`` with ``r >= s! - s - 1``."""
    if r < 2:
        raise DomainError(f"c_r needs r >= 2, got {r}")
    s = 0
    while r >= factorial(s + 1) - (s + 1) - 1:
        s += 1
    return s


def staircase_run(seq) -> int:
    """Length of the initial run of ``+1`` steps."""
    k = 0
    while k + 1 < len(seq) and seq[k + 1] == seq[k] + 1:
        k += 1
    return k


def m_max_formula(r: int) -> int:
    a = abs(r)
    if a == 0:
        return 2
    if a == 1:
        return 3
    if a == 2:
        return 4
    return a


@dataclass(frozen=True)
class SearchConfig:
    start: int
    max_index: int | None = None
    emit_families: bool = False

    def __post_init__(self):
        if self.max_index is None:
            object.__setattr__(self, "max_index", m_max_formula(self.start) + 2)
        if self.max_index < 1:
            raise DomainError("max_index must be >= 1")


@dataclass
class EnumerationResult:
    start: int
    sequences: list[Sequence_]
    families: list[SequenceFamily] | None = None
    nodes_explored: int = 0
    max_index_found: int = field(init=False)

    def __post_init__(self):
        self.max_index_found = max((len(s) - 1 for s in self.sequences), default=0)

    def to_dict(self) -> dict:
        out = {"start": self.start, "sequences": [list(s) for s in self.sequences]}
        if self.families is not None:
            out["families"] = [f.to_dict() for f in self.families]
        out["max_index_found"] = self.max_index_found
        out["nodes_explored"] = self.nodes_explored
        return out


class _Search:
    def __init__(self, start: int, max_index: int, staircase_prune: bool, prefix_prune: bool):
        self.start = start
        self.max_index = max_index
        self.sign = 1 if start > 0 else -1
        # the staircase bound is stated for starts >= 2; starts <= -2 are mirrored
        self.stair_cap = c_r(abs(start)) if abs(start) >= 2 and staircase_prune else None
        self.prefix_prune = prefix_prune
        self.found: list[Sequence_] = []
        self.nodes = 0

    def run(self):
        self._walk([self.start], None, IntegralNewton(), True)

    def _walk(self, seq: list[int], prev_step: int | None, newton: IntegralNewton, on_stair: bool):
        self.nodes += 1
        cur = seq[-1]
        depth = len(seq) - 1
        for mag in divisors(cur):
            for step in (-mag, mag):
                if prev_step is not None and step % prev_step:
                    continue
                nxt = cur + step
                if nxt in seq:
                    continue
                stair = on_stair and step == self.sign
                if stair and self.stair_cap is not None and depth + 1 > self.stair_cap:
                    continue
                if nxt != 0 and depth + 2 > self.max_index:
                    continue
                ext = newton.extended(cur, nxt) if self.prefix_prune else newton
                if ext is None:
                    continue
                seq.append(nxt)
                if nxt == 0:
                    self.nodes += 1
                    cand = tuple(seq)
                    if realizable_by_int_poly(zip(cand[:-1], cand[1:])) is not None:
                        self.found.append(cand)
                else:
                    self._walk(seq, step, ext, stair)
                seq.pop()


def enumerate_nilpotent_sequences(cfg: SearchConfig, *, staircase_prune: bool = True,
                                  prefix_prune: bool = True) -> EnumerationResult:
    """All realizable sequences at ``cfg.start`` of index at most ``cfg.max_index``.

    The two keyword switches only exist to check that the corresponding
    pruning rules never remove a realizable sequence.
    """
    if cfg.start == 0:
        raise ZeroStart("start 0 admits the infinite family 0 -> a -> 0 for every a != 0")
    s = _Search(cfg.start, cfg.max_index, staircase_prune, prefix_prune)
    s.run()
    seqs = sorted(s.found)
    fams = [family_from_sequence(q) for q in seqs] if cfg.emit_families else None
    return EnumerationResult(cfg.start, seqs, fams, s.nodes)


def enumerate_sequences(r: int, max_index: int | None = None) -> list[Sequence_]:
    return enumerate_nilpotent_sequences(SearchConfig(r, max_index)).sequences


def max_index_families(r: int) -> list[SequenceFamily]:
    """Families of index exactly ``|r|`` (the largest possible once ``|r| >= 3``)."""
    if abs(r) < 4:
        raise DomainError(f"max_index_families needs |r| >= 4, got {r}")
    m = m_max_formula(r)
    res = enumerate_nilpotent_sequences(SearchConfig(r, m, emit_families=True))
    return [f for f in res.families if f.index == m]


def extremal_staircase_poly(k: int) -> tuple[int, IntPoly]:
    """Start ``r = k! - k - 1`` and ``u = (x+1) - (x-r)...(x-r-k+1)``.

    ``u`` climbs ``r, r+1, ..., r+k`` and then drops to 0, so the staircase
    bound is attained.
    """
    if k < 3:
        raise DomainError("k must be >= 3")
    r = factorial(k) - k - 1
    u = IntPoly((1, 1)) - IntPoly.from_roots(range(r, r + k))
    return r, u


def _naive_first_zero(coeffs: tuple[int, ...], r: int, step_cap: int, cutoff: int) -> list[int] | None:
    # plain iteration, deliberately independent of the orbit engine
    vals = [r]
    seen = {r}
    x = r
    for _ in range(step_cap):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        x = acc
        vals.append(x)
        if x == 0:
            return vals
        if x in seen or abs(x) > cutoff:
            return None
        seen.add(x)
    return None


def brute_force_oracle(r: int, deg_max: int, coeff_max: int, step_cap: int,
                       cutoff: int = 10**18) -> set[Sequence_]:
    """Associated sequences of every box polynomial nilpotent at ``r`` within ``step_cap`` steps.

    Cost is ``(2*coeff_max + 1) ** (deg_max + 1)`` orbit walks.
    """
    out = set()
    rng = range(-coeff_max, coeff_max + 1)
    for coeffs in product(rng, repeat=deg_max + 1):
        vals = _naive_first_zero(coeffs, r, step_cap, cutoff)
        if vals is not None:
            out.add(tuple(vals))
    return out


def fact_zero_description() -> dict:
    """Closed-form answer at start 0, where the families are infinite."""
    return {
        "start": 0,
        "index_1": "x*p(x) with p(x) any integer polynomial (orbit 0, 0)",
        "index_2": "(x - a)*(x*p(x) - 1) with a != 0 and p(x) any integer polynomial (orbit 0, a, 0)",
        "max_index": 2,
    }
