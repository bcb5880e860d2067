"""Dense integer and rational polynomials.

Coefficients are stored ascending by exponent (``coeffs[i]`` multiplies
``x**i``) with trailing zeros stripped, so the zero polynomial is the empty
tuple and its degree is ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from nilpoly.errors import NonIntegralReduction, PolySyntaxError, ZeroArgument


def _strip(coeffs: Iterable) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = _strip(self.coeffs)
        for a in c:
            if not isinstance(a, int) or isinstance(a, bool):
                raise TypeError(f"integer coefficient expected, got {a!r}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        """Monic product of ``(x - r)`` over ``roots``."""
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_poly(self)

    def to_ratpoly(self) -> RatPoly:
        return RatPoly(Fraction(c) for c in self.coeffs)


@dataclass(frozen=True)
class RatPoly:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: RatPoly) -> RatPoly:
        return RatPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __mul__(self, other: RatPoly | Fraction | int) -> RatPoly:
        if not isinstance(other, RatPoly):
            return RatPoly(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__


# ---------------------------------------------------------------------------
# text form

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def uint(self) -> int | None:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            return None
        return int(self.text[start:self.pos])

    def fail(self, message: str):
        # offsets are reported in bytes of the UTF-8 encoding
        raise PolySyntaxError(message, len(self.text[:self.pos].encode()))


def _parse_list(sc: _Scanner) -> IntPoly:
    coeffs = []
    while True:
        neg = sc.take("-")
        n = sc.uint()
        if n is None:
            sc.fail("expected integer")
        coeffs.append(-n if neg else n)
        if sc.take(","):
            continue
        if sc.take("]"):
            break
        sc.fail("expected ',' or ']'")
    if sc.peek():
        sc.fail("trailing input")
    return IntPoly(coeffs)


def _parse_term(sc: _Scanner) -> tuple[int, int]:
    coeff = sc.uint()
    if coeff is not None and sc.take("*"):
        if sc.peek() != "x":
            sc.fail("expected 'x' after '*'")
    if sc.take("x"):
        power = 1
        if sc.take("^"):
            power = sc.uint()
            if power is None:
                sc.fail("expected exponent")
        return (1 if coeff is None else coeff), power
    if coeff is None:
        sc.fail("expected term")
    return coeff, 0


def parse_poly(text: str) -> IntPoly:
    """Parse ``-x^3+9x^2-25x+25`` style text or an ascending list ``[25,-25,9,-1]``."""
    sc = _Scanner(text)
    if sc.take("["):
        return _parse_list(sc)
    acc: dict[int, int] = {}
    sign = -1 if sc.take("-") else 1
    while True:
        coeff, power = _parse_term(sc)
        acc[power] = acc.get(power, 0) + sign * coeff
        ch = sc.peek()
        if ch == "":
            break
        if ch not in "+-":
            sc.fail(f"unexpected {ch!r}")
        sc.pos += 1
        sign = 1 if ch == "+" else -1
    top = max(acc)
    return IntPoly(acc.get(i, 0) for i in range(top + 1))


def format_poly(u: IntPoly) -> str:
    if u.is_zero():
        return "0"
    parts = []
    for k in range(len(u.coeffs) - 1, -1, -1):
        c = u.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# evaluation and transforms

def evaluate(u: IntPoly, x: int) -> int:
    return u(x)


def iterate_value(u: IntPoly, r: int, n: int) -> int:
    """The ``n``-th iterate of ``u`` at ``r``; ``n == 0`` gives ``r``."""
    if n < 0:
        raise ValueError("iteration count must be nonnegative")
    for _ in range(n):
        r = u(r)
    return r


def compose(u: IntPoly, v: IntPoly) -> IntPoly:
    """``u(v(x))`` by Horner's scheme over polynomials."""
    acc = IntPoly()
    for c in reversed(u.coeffs):
        acc = acc * v + IntPoly.const(c)
    return acc


def negate_reflect(u: IntPoly) -> IntPoly:
    """``-u(-x)``: flips the sign of the even-degree coefficients."""
    return IntPoly(-c if i % 2 == 0 else c for i, c in enumerate(u.coeffs))


def scale_reduce(u: IntPoly, a: int) -> IntPoly:
    """``u(a*x)/a``, raising :class:`NonIntegralReduction` unless integral."""
    if a == 0:
        raise ZeroArgument("scale factor must be nonzero")
    out = []
    for i, c in enumerate(u.coeffs):
        num = c * a**i
        if num % a:
            raise NonIntegralReduction(f"coefficient of x^{i} becomes {Fraction(num, a)}")
        out.append(num // a)
    return IntPoly(out)


def rational_eval(u: IntPoly, q: Fraction) -> Fraction:
    q = Fraction(q)
    acc = Fraction(0)
    for c in reversed(u.coeffs):
        acc = acc * q + c
    return acc


def prime_support(n: int) -> set[int]:
    """Primes dividing ``|n|`` by trial division."""
    if n == 0:
        raise ZeroArgument("prime support of 0 is undefined")
    n = abs(n)
    out = set()
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.add(n)
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order."""
    if n == 0:
        raise ZeroArgument("every integer divides 0")
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def as_poly(u: IntPoly | str | Sequence[int]) -> IntPoly:
    if isinstance(u, IntPoly):
        return u
    if isinstance(u, str):
        return parse_poly(u)
    return IntPoly(tuple(u))
