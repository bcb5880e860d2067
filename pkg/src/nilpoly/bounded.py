"""Bounded integer polynomial orbits and their seven shapes.

With ``eps`` in ``{1, -1}`` and integers ``S``, ``R`` a bounded orbit, written
as (preperiod, cycle), is one of

    1  ()                  (S,)
    2  (R,)                (S,)
    3  (S+eps, S+2eps)     (S,)
    4  (S+2eps, S+4eps)    (S,)
    5  ()                  (S, R)
    6  (S+eps,)            (S, R)        R - S != eps
    7  (S+2eps, S+eps)     (S, S+3eps)

The same catalogue, shifted so that the recurring value is 0, settles which
recurringly nilpotent prefixes a polynomial can generate.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from nilpoly.errors import DomainError, InvalidForm, NonMinimalInput, NotRealizable
from nilpoly.interpolation import realizable_by_int_poly
from nilpoly.orbit import Divergent, EventuallyPeriodic, Nilpotent, orbit_classify
from nilpoly.poly import IntPoly

_NEEDS_R = {2, 5, 6}
_NEEDS_EPS = {3, 4, 6, 7}
# fixed matching order so classification is a function
MATCH_ORDER = (1, 5, 2, 6, 3, 4, 7)


@dataclass(frozen=True)
class BoundedForm:
    tag: int
    S: int
    R: int | None = None
    eps: int | None = None

    def __post_init__(self):
        if self.tag not in range(1, 8):
            raise InvalidForm(f"form tag must be 1..7, got {self.tag}")
        if (self.R is not None) != (self.tag in _NEEDS_R):
            raise InvalidForm(f"form {self.tag} {'needs' if self.tag in _NEEDS_R else 'takes no'} R")
        if (self.eps is not None) != (self.tag in _NEEDS_EPS):
            raise InvalidForm(f"form {self.tag} {'needs' if self.tag in _NEEDS_EPS else 'takes no'} eps")
        if self.eps is not None and self.eps not in (1, -1):
            raise InvalidForm(f"eps must be +1 or -1, got {self.eps}")
        if self.tag in (2, 5, 6) and self.R == self.S:
            raise InvalidForm(f"form {self.tag} needs R != S")
        if self.tag == 6 and self.R - self.S == self.eps:
            raise InvalidForm("form 6 needs R - S != eps")

    def pattern(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        S, R, e = self.S, self.R, self.eps
        if self.tag == 1:
            return (), (S,)
        if self.tag == 2:
            return (R,), (S,)
        if self.tag == 3:
            return (S + e, S + 2 * e), (S,)
        if self.tag == 4:
            return (S + 2 * e, S + 4 * e), (S,)
        if self.tag == 5:
            return (), (S, R)
        if self.tag == 6:
            return (S + e,), (S, R)
        return (S + 2 * e, S + e), (S, S + 3 * e)

    @property
    def first(self) -> int:
        pre, cyc = self.pattern()
        return (pre + cyc)[0]

    def to_dict(self) -> dict:
        out = {"form": self.tag, "S": self.S}
        if self.R is not None:
            out["R"] = self.R
        if self.eps is not None:
            out["eps"] = self.eps
        return out


@dataclass(frozen=True)
class EventualOrbit:
    preperiod: tuple[int, ...]
    cycle: tuple[int, ...]

    def is_minimal(self) -> bool:
        allv = self.preperiod + self.cycle
        if not self.cycle or len(set(allv)) != len(allv):
            return False
        return not self.preperiod or self.preperiod[-1] != self.cycle[-1]

    @classmethod
    def normalized(cls, preperiod: Sequence[int], cycle: Sequence[int]) -> EventualOrbit:
        """Shortest period, then absorb preperiod entries that continue the cycle."""
        pre, cyc = list(preperiod), list(cycle)
        if not cyc:
            raise NonMinimalInput("empty cycle")
        n = len(cyc)
        for p in range(1, n + 1):
            if n % p == 0 and cyc == cyc[:p] * (n // p):
                cyc = cyc[:p]
                break
        while pre and pre[-1] == cyc[-1]:
            pre.pop()
            cyc = cyc[-1:] + cyc[:-1]
        return cls(tuple(pre), tuple(cyc))


def _match(tag: int, pre: tuple, cyc: tuple) -> BoundedForm | None:
    shape = (len(pre), len(cyc))
    S = cyc[0]
    if tag == 1 and shape == (0, 1):
        return BoundedForm(1, S)
    if tag == 5 and shape == (0, 2):
        return BoundedForm(5, S, R=cyc[1])
    if tag == 2 and shape == (1, 1):
        return BoundedForm(2, S, R=pre[0])
    if tag == 6 and shape == (1, 2):
        e = pre[0] - S
        if e in (1, -1) and cyc[1] - S != e:
            return BoundedForm(6, S, R=cyc[1], eps=e)
    if tag in (3, 4) and shape == (2, 1):
        k = 1 if tag == 3 else 2
        e, rem = divmod(pre[0] - S, k)
        if rem == 0 and e in (1, -1) and pre[1] == S + 2 * k * e:
            return BoundedForm(tag, S, eps=e)
    if tag == 7 and shape == (2, 2):
        e = pre[1] - S
        if e in (1, -1) and pre[0] == S + 2 * e and cyc[1] == S + 3 * e:
            return BoundedForm(7, S, eps=e)
    return None


def classify_bounded(o: EventualOrbit) -> BoundedForm | None:
    """Template match; ``None`` means no integer polynomial has this orbit."""
    if not o.is_minimal():
        raise NonMinimalInput(f"not a minimal orbit: {list(o.preperiod)} {list(o.cycle)}")
    hits = [f for f in (_match(t, o.preperiod, o.cycle) for t in MATCH_ORDER) if f is not None]
    assert len(hits) <= 1, hits
    return hits[0] if hits else None


def _successor_map(pre: Sequence[int], cyc: Sequence[int]) -> list[tuple[int, int]]:
    seq = list(pre) + list(cyc)
    nxt = seq[1:] + [cyc[0]]
    return list(zip(seq, nxt))


def witness_for_form(f: BoundedForm) -> IntPoly:
    """A polynomial whose orbit from ``f.first`` is exactly the pattern of ``f``."""
    if f.tag == 1:
        return IntPoly.x()
    pre, cyc = f.pattern()
    u = realizable_by_int_poly(_successor_map(pre, cyc))
    if u is None:
        raise NotRealizable(f"no integer witness for {f}")
    return u


def eventual_orbit(u: IntPoly, r: int) -> EventualOrbit | None:
    """The orbit of ``u`` from ``r`` as (preperiod, cycle); ``None`` if unbounded."""
    rep = orbit_classify(u, r)
    st = rep.status
    if isinstance(st, Divergent):
        return None
    if isinstance(st, EventuallyPeriodic):
        return EventualOrbit.normalized(rep.values[:st.preperiod], st.cycle)
    head = rep.values[:st.index]
    tail = orbit_classify(u, 0)
    ts = tail.status
    if isinstance(ts, Divergent):
        return None
    if isinstance(ts, Nilpotent):
        return EventualOrbit.normalized(head, tail.values[:ts.index])
    return EventualOrbit.normalized(head + tail.values[:ts.preperiod], ts.cycle)


def classify_orbit_of(u: IntPoly, r: int) -> BoundedForm | None:
    """Form of the orbit at ``r``, or ``None`` when it is unbounded.

    Raises :class:`NotRealizable` if a bounded orbit fits no form.
    """
    o = eventual_orbit(u, r)
    if o is None:
        return None
    form = classify_bounded(o)
    if form is None:
        raise NotRealizable(f"orbit of {u} at {r} fits no form: {list(o.preperiod)} {list(o.cycle)}")
    return form


@dataclass
class ScanReport:
    deg_max: int
    coeff_max: int
    r_lo: int
    r_hi: int
    polynomials: int = 0
    orbits: int = 0
    unbounded: int = 0
    form_counts: dict[int, int] = field(default_factory=lambda: {t: 0 for t in range(1, 8)})
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def bounded(self) -> int:
        return self.orbits - self.unbounded

    def merge(self, other: ScanReport):
        self.polynomials += other.polynomials
        self.orbits += other.orbits
        self.unbounded += other.unbounded
        for t, n in other.form_counts.items():
            self.form_counts[t] += n
        self.counterexamples.extend(other.counterexamples)

    def to_dict(self) -> dict:
        return {
            "deg_max": self.deg_max,
            "coeff_max": self.coeff_max,
            "r_lo": self.r_lo,
            "r_hi": self.r_hi,
            "polynomials": self.polynomials,
            "orbits": self.orbits,
            "unbounded": self.unbounded,
            "bounded": self.bounded,
            "form_counts": {str(t): n for t, n in sorted(self.form_counts.items())},
            "counterexamples": self.counterexamples,
        }


def _scan_chunk(args) -> ScanReport:
    lead, deg_max, coeff_max, r_lo, r_hi = args
    rep = ScanReport(deg_max, coeff_max, r_lo, r_hi)
    rng = range(-coeff_max, coeff_max + 1)
    for low in product(rng, repeat=deg_max):
        u = IntPoly(low + (lead,))
        rep.polynomials += 1
        for r in range(r_lo, r_hi + 1):
            rep.orbits += 1
            o = eventual_orbit(u, r)
            if o is None:
                rep.unbounded += 1
                continue
            f = classify_bounded(o)
            if f is None:
                rep.counterexamples.append({
                    "poly": list(u.coeffs), "r": r,
                    "preperiod": list(o.preperiod), "cycle": list(o.cycle),
                })
            else:
                rep.form_counts[f.tag] += 1
    return rep


def scan_bounded_orbits(deg_max: int, coeff_max: int, r_lo: int, r_hi: int,
                        workers: int = 1) -> ScanReport:
    """Classify every bounded orbit in a coefficient box; the merge is order-independent."""
    if deg_max < 0 or coeff_max < 0 or r_lo > r_hi:
        raise DomainError("empty or invalid scan box")
    chunks = [(lead, deg_max, coeff_max, r_lo, r_hi) for lead in range(-coeff_max, coeff_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan_chunk, chunks))
    else:
        parts = [_scan_chunk(c) for c in chunks]
    out = ScanReport(deg_max, coeff_max, r_lo, r_hi)
    for p in parts:
        out.merge(p)
    return out


# ---------------------------------------------------------------------------
# recurringly nilpotent patterns

ONE_ZERO_TAIL = "one-zero-tail"
ALTERNATING_ZERO = "alternating-zero"
KINDS = (ONE_ZERO_TAIL, ALTERNATING_ZERO)


def _check_pattern_args(kind: str, prefix: Sequence[int], recurring: int | None):
    if kind not in KINDS:
        raise DomainError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}")
    if 0 in prefix:
        raise DomainError("prefix entries must be nonzero")
    if kind == ALTERNATING_ZERO and not recurring:
        raise DomainError("alternating-zero needs a nonzero recurring value")
    if kind == ONE_ZERO_TAIL and recurring is not None:
        raise DomainError("one-zero-tail takes no recurring value")


def pattern_point_map(kind: str, prefix: Sequence[int], recurring: int | None = None) -> list[tuple[int, int]] | None:
    """Functional graph of the pattern, or ``None`` if it assigns two images to one value."""
    _check_pattern_args(kind, prefix, recurring)
    seq = list(prefix) + [0]
    if kind == ONE_ZERO_TAIL:
        seq += [0]
    else:
        seq += [recurring, 0]
    img: dict[int, int] = {}
    for a, b in zip(seq, seq[1:]):
        if img.setdefault(a, b) != b:
            return None
    if len(set(prefix)) != len(prefix):
        return None
    return sorted(img.items())


def _pattern_allowed(kind: str, prefix: Sequence[int], recurring: int | None) -> bool:
    if len(set(prefix)) != len(prefix):
        return False
    m = len(prefix)
    if kind == ONE_ZERO_TAIL:
        if m <= 1:
            return True
        if m == 2:
            r0, r1 = prefix
            return r0 in (1, -1, 2, -2) and r1 == 2 * r0
        return False
    s = recurring
    if m == 0:
        return True
    if m == 1:
        return prefix[0] == s or prefix[0] in (1, -1)
    if m == 2:
        r0, r1 = prefix
        return (s == r1 and r1 - r0 in (1, -1)) or any(
            (r0, r1, s) == (2 * e, e, 3 * e) for e in (1, -1))
    if m == 3:
        return any((*prefix, s) == (e, 2 * e, 3 * e, 3 * e) for e in (1, -1))
    return False


def recurring_pattern_check(m: int, kind: str, prefix: Sequence[int],
                            recurring: int | None = None) -> IntPoly | None:
    """Witness polynomial for a recurringly nilpotent pattern, or ``None``.

    ``one-zero-tail`` is ``prefix, 0, 0, ...``; ``alternating-zero`` is
    ``prefix, 0, recurring, 0, recurring, ...``.  Realizability follows the
    closed case list (at most three nonzero prefix terms); the witness is the
    integer interpolant of the pattern's functional graph.
    """
    if m != len(prefix):
        raise DomainError(f"prefix has {len(prefix)} entries, expected {m}")
    _check_pattern_args(kind, prefix, recurring)
    if not _pattern_allowed(kind, prefix, recurring):
        return None
    pm = pattern_point_map(kind, prefix, recurring)
    u = realizable_by_int_poly(pm) if pm is not None else None
    if u is None:
        raise RuntimeError(f"case list admits {kind} {list(prefix)} {recurring} but no integer interpolant exists")
    return u
