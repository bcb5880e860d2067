"""Deciding the fate of an integer orbit ``r, u(r), u(u(r)), ...``.

Every orbit is either nilpotent (reaches 0), eventually periodic without
touching 0, or divergent.  Divergence is certified by an escape radius ``B``
beyond which ``|u(x)| > |x|``; translations ``x + b`` have no such radius and
are solved in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from nilpoly.errors import NotApplicable
from nilpoly.poly import IntPoly


@dataclass(frozen=True)
class Nilpotent:
    index: int
    kind = "nilpotent"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "index": self.index}


@dataclass(frozen=True)
class EventuallyPeriodic:
    preperiod: int
    cycle: tuple[int, ...]
    kind = "periodic"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "preperiod": self.preperiod, "cycle": list(self.cycle)}


@dataclass(frozen=True)
class Divergent:
    # from values[escape_step] on, |value| strictly increases
    escape_step: int
    bound: int
    kind = "divergent"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "escape_step": self.escape_step, "bound": self.bound}


Status = Union[Nilpotent, EventuallyPeriodic, Divergent]


@dataclass(frozen=True)
class OrbitReport:
    start: int
    values: tuple[int, ...]
    status: Status
    differences: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        v = self.values
        object.__setattr__(self, "differences", tuple(b - a for a, b in zip(v, v[1:])))

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "values": list(self.values),
            "differences": list(self.differences),
            "status": self.status.to_dict(),
        }


def _exceeds(u: IntPoly, x: int) -> bool:
    return abs(u(x)) > abs(x)


@lru_cache(maxsize=4096)
def escape_bound(u: IntPoly) -> int:
    """Smallest ``B >= 1`` with ``|u(x)| > |x|`` for all integers ``|x| >= B``."""
    d = u.degree
    if d is None or d == 0 or (d == 1 and abs(u.leading) == 1):
        raise NotApplicable(f"no escape radius for {u}")
    lead = abs(u.leading)
    tail = [abs(c) for c in u.coeffs[:-1]]

    def certified(b: int) -> bool:
        # |a_d| b^d > b + sum |a_i| b^i; increasing in b once it holds
        return lead * b**d > b + sum(c * b**i for i, c in enumerate(tail))

    hi = 1
    while not certified(hi):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if certified(mid):
            hi = mid
        else:
            lo = mid
    b = hi
    while b > 1 and _exceeds(u, b - 1) and _exceeds(u, 1 - b):
        b -= 1
    return b


def _translation(u: IntPoly, r: int) -> OrbitReport:
    b = u.coeffs[0]
    if r % b == 0 and -r // b > 0:
        m = -r // b
        return OrbitReport(r, tuple(r + i * b for i in range(m + 1)), Nilpotent(m))
    # first step whose value has the sign of b; after it |value| grows by |b|
    n = 0 if r * b > 0 else (-r) // b + 1
    values = tuple(r + i * b for i in range(n + 1))
    return OrbitReport(r, values, Divergent(n, abs(values[-1])))


def _iterate(u: IntPoly, r: int, bound: int | None) -> OrbitReport:
    values = [r]
    seen = {r: 0}
    if bound is not None and abs(r) >= bound:
        return OrbitReport(r, (r,), Divergent(0, bound))
    x = r
    while True:
        x = u(x)
        values.append(x)
        step = len(values) - 1
        if x == 0:
            return OrbitReport(r, tuple(values), Nilpotent(step))
        if x in seen:
            pre = seen[x]
            return OrbitReport(r, tuple(values), EventuallyPeriodic(pre, tuple(values[pre:-1])))
        if bound is not None and abs(x) >= bound:
            return OrbitReport(r, tuple(values), Divergent(step, bound))
        seen[x] = step


def orbit_classify(u: IntPoly, r: int) -> OrbitReport:
    """Total decision of the orbit of ``u`` at ``r``."""
    if u.is_zero():
        return OrbitReport(r, (r, 0), Nilpotent(1))
    d = u.degree
    if d == 1 and u.leading == 1 and u.coeffs[0] != 0:
        return _translation(u, r)
    # constants, the identity and x -> b - x have orbits of at most 3 states
    if d == 0 or (d == 1 and abs(u.leading) == 1):
        return _iterate(u, r, None)
    return _iterate(u, r, escape_bound(u))


def nilpotency_index(u: IntPoly, r: int) -> int | None:
    st = orbit_classify(u, r).status
    return st.index if isinstance(st, Nilpotent) else None


def differences(u: IntPoly, r: int, n: int) -> list[int]:
    out = []
    x = r
    for _ in range(n):
        y = u(x)
        out.append(y - x)
        x = y
    return out


def is_recurringly_nilpotent(u: IntPoly, r: int) -> bool:
    """True iff the orbit reaches 0 and 0 is then periodic (period 1 or 2)."""
    if nilpotency_index(u, r) is None:
        return False
    z = u(0)
    return z == 0 or u(z) == 0
