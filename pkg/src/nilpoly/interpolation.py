"""Exact interpolation over Q and the integrality test for point maps.

An integer polynomial through points ``(n_i, v_i)`` with distinct integer
nodes exists iff the interpolant of minimal degree has integer coefficients,
so :func:`realizable_by_int_poly` is an exact decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from nilpoly.errors import DuplicateNode, InvalidSequence, NotRealizable
from nilpoly.poly import IntPoly, RatPoly

Point = tuple[int, int]


def _points(pm: Iterable[Point]) -> list[Point]:
    pts = [(int(n), int(v)) for n, v in pm]
    if not pts:
        raise ValueError("point map must be nonempty")
    nodes = [n for n, _ in pts]
    if len(set(nodes)) != len(nodes):
        raise DuplicateNode(f"repeated node in {nodes}")
    return pts


def divided_differences(pm: Iterable[Point]) -> list[Fraction]:
    """Newton coefficients ``f[n_0], f[n_0,n_1], ...`` in node order."""
    pts = _points(pm)
    xs = [n for n, _ in pts]
    col = [Fraction(v) for _, v in pts]
    out = [col[0]]
    for j in range(1, len(pts)):
        col = [(col[i + 1] - col[i]) / (xs[i + j] - xs[i]) for i in range(len(col) - 1)]
        out.append(col[0])
    return out


def lagrange(pm: Iterable[Point]) -> RatPoly:
    """The unique polynomial of degree < n through the n given points."""
    pts = _points(pm)
    xs = [n for n, _ in pts]
    coef = divided_differences(pts)
    acc = RatPoly()
    # Horner on the Newton form: c_0 + (x - x_0)(c_1 + (x - x_1)(...))
    for k in range(len(coef) - 1, -1, -1):
        acc = acc * RatPoly((Fraction(-xs[k]), Fraction(1))) + RatPoly((coef[k],))
    return acc


@dataclass(frozen=True)
class NonIntegral:
    exponent: int
    coefficient: Fraction


def integral_part(p: RatPoly) -> IntPoly | NonIntegral:
    for i, c in enumerate(p.coeffs):
        if c.denominator != 1:
            return NonIntegral(i, c)
    return IntPoly(int(c) for c in p.coeffs)


def realizable_by_int_poly(pm: Iterable[Point]) -> IntPoly | None:
    """Integer interpolant of the point map, or ``None`` if no integer polynomial fits."""
    res = integral_part(lagrange(pm))
    return res if isinstance(res, IntPoly) else None


class IntegralNewton:
    """Incremental divided-difference table that fails fast on non-integrality.

    Every divided difference of a realizable map is the leading coefficient of
    the integer interpolant of a sub-map, hence an integer, so the table is
    kept in integers and an inexact division proves non-realizability.
    """

    def __init__(self):
        self.nodes: list[int] = []
        self.row: list[int] = []  # f[x_k], f[x_{k-1},x_k], ..., f[x_0..x_k]

    def extended(self, node: int, value: int) -> IntegralNewton | None:
        row = [value]
        for i, prev in enumerate(self.row):
            num = row[-1] - prev
            den = node - self.nodes[len(self.nodes) - 1 - i]
            if den == 0:
                raise DuplicateNode(f"repeated node {node}")
            if num % den:
                return None
            row.append(num // den)
        out = IntegralNewton()
        out.nodes = self.nodes + [node]
        out.row = row
        return out


@dataclass(frozen=True)
class SequenceFamily:
    """All polynomials ``interpolant + p*modulus`` realizing ``sequence``.

    ``modulus`` carries the root at 0 as well as every node, so the coset is
    the sub-family that also fixes the value at 0; :meth:`realizes` tests
    the full condition on the nodes alone.
    """

    sequence: tuple[int, ...]
    interpolant: IntPoly
    modulus: IntPoly

    @property
    def start(self) -> int:
        return self.sequence[0]

    @property
    def index(self) -> int:
        return len(self.sequence) - 1

    def point_map(self) -> list[Point]:
        return list(zip(self.sequence[:-1], self.sequence[1:]))

    def member(self, p: IntPoly) -> IntPoly:
        return family_member(self, p)

    def realizes(self, u: IntPoly) -> bool:
        return all(u(n) == v for n, v in self.point_map())

    def to_dict(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "interpolant": list(self.interpolant.coeffs),
            "modulus": list(self.modulus.coeffs),
        }


def check_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(int(s) for s in seq)
    if len(seq) < 2 or seq[-1] != 0:
        raise InvalidSequence(f"sequence must have length >= 2 and end in 0: {list(seq)}")
    body = seq[:-1]
    if 0 in body:
        raise InvalidSequence(f"zero before the final entry: {list(seq)}")
    if len(set(body)) != len(body):
        raise InvalidSequence(f"repeated entry: {list(seq)}")
    return seq


def family_from_sequence(seq: Sequence[int]) -> SequenceFamily:
    seq = check_sequence(seq)
    pm = list(zip(seq[:-1], seq[1:]))
    interp = realizable_by_int_poly(pm)
    if interp is None:
        raise NotRealizable(f"no integer polynomial realizes {list(seq)}")
    return SequenceFamily(seq, interp, IntPoly.from_roots((0,) + seq[:-1]))


def family_member(f: SequenceFamily, p: IntPoly) -> IntPoly:
    return f.interpolant + p * f.modulus
