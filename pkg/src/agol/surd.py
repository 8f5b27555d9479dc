"""
Exact arithmetic in a real quadratic field Q(sqrt(D)) and continued fractions.

A value is stored as (p + q*sqrt(D)) / r with r > 0 and gcd(p, q, r) = 1. The
radicand D is carried by every value and is never reduced to its square-free
part, so two values are comparable only when they carry the same D. Every
decision (sign, floor, comparisons) is made with integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering

from .errors import DomainError, FieldMismatchError


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


@total_ordering
class Quad:
    """An element (p + q*sqrt(D)) / r of Q(sqrt(D)), always normalized."""

    __slots__ = ("p", "q", "r", "D")

    def __init__(self, p: int, q: int = 0, r: int = 1, D: int = 5):
        p, q, r, D = int(p), int(q), int(r), int(D)
        if D <= 0 or is_square(D):
            raise DomainError(f"radicand must be a positive non-square, got {D}")
        if r == 0:
            raise ZeroDivisionError("Quad with zero denominator")
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(p, q), r)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "r", r // g)
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("Quad is immutable")

    @classmethod
    def rational(cls, value, D: int) -> "Quad":
        value = Fraction(value)
        return cls(value.numerator, 0, value.denominator, D)

    @classmethod
    def sqrt(cls, D: int) -> "Quad":
        return cls(0, 1, 1, D)

    def _coerce(self, other) -> "Quad":
        if isinstance(other, Quad):
            if other.D != self.D:
                raise FieldMismatchError(f"cannot combine Q(sqrt({self.D})) with Q(sqrt({other.D}))")
            return other
        if isinstance(other, (int, Fraction)):
            return Quad.rational(other, self.D)
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def conjugate(self) -> "Quad":
        return Quad(self.p, -self.q, self.r, self.D)

    def norm(self) -> Fraction:
        return Fraction(self.p * self.p - self.q * self.q * self.D, self.r * self.r)

    def trace(self) -> Fraction:
        return Fraction(2 * self.p, self.r)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r, self.D)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.p, -self.q, self.r, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(
            self.p * o.p + self.q * o.q * self.D,
            self.p * o.q + self.q * o.p,
            self.r * o.r,
            self.D,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Quad":
        # r / (p + q sqrt D) = r (p - q sqrt D) / (p^2 - q^2 D); the norm vanishes only at 0
        n = self.p * self.p - self.q * self.q * self.D
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return Quad(self.r * self.p, -self.r * self.q, n, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def sign(self) -> int:
        return quad_sign(self)

    def __floor__(self) -> int:
        return quad_floor(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Quad.rational(other, self.D)
        if not isinstance(other, Quad):
            return NotImplemented
        return (self.p, self.q, self.r, self.D) == (other.p, other.q, other.r, other.D)

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r, self.D))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return quad_sign(self - o) < 0

    def __bool__(self):
        return self.p != 0 or self.q != 0

    def __float__(self):
        return float(self.to_decimal(30))

    def to_decimal(self, digits: int = 30) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            value = (Decimal(self.p) + Decimal(self.q) * Decimal(self.D).sqrt()) / Decimal(self.r)
            ctx.prec = digits
            return +value

    def __repr__(self):
        return f"Quad({self.p}, {self.q}, {self.r}, D={self.D})"

    def __str__(self):
        if self.q == 0:
            return str(Fraction(self.p, self.r))
        sgn = "+" if self.q > 0 else "-"
        coef = "" if abs(self.q) == 1 else str(abs(self.q))
        num = f"{self.p}{sgn}{coef}√{self.D}" if self.p else f"{'-' if self.q < 0 else ''}{coef}√{self.D}"
        return num if self.r == 1 else f"({num})/{self.r}"


def quad_arith(op: str, a: Quad, b: Quad | None = None) -> Quad:
    """Dispatch by name; the operator overloads on Quad are the usual entry point."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise DomainError(f"unknown operation {op!r}")


def quad_sign(a: Quad) -> int:
    """Exact sign of (p + q sqrt D)/r, decided by comparing p^2 with q^2 D."""
    sp, sq = _sign(a.p), _sign(a.q)
    if sq == 0 or sp == sq:
        return sp or sq
    if sp == 0:
        return sq
    # opposite signs: the larger magnitude wins
    diff = a.p * a.p - a.q * a.q * a.D
    return sp if diff > 0 else sq


def _floor_surd(P: int, d: int, Q: int) -> int:
    """floor((P + sqrt(d)) / Q) for non-square d > 0 and Q != 0."""
    t = math.isqrt(d)
    if Q > 0:
        return (P + t) // Q
    return -((P + t) // -Q) - 1


def quad_floor(a: Quad) -> int:
    if a.q == 0:
        return a.p // a.r
    d = a.q * a.q * a.D
    if a.q > 0:
        return _floor_surd(a.p, d, a.r)
    # (p - sqrt d)/r = (-p + sqrt d)/(-r)
    return _floor_surd(-a.p, d, -a.r)


@dataclass(frozen=True)
class CFExpansion:
    """[preperiod; period repeated]. The period is empty for rationals."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()

    @property
    def is_purely_periodic(self) -> bool:
        return not self.preperiod and bool(self.period)

    def terms(self, n: int) -> list[int]:
        out = list(self.preperiod[:n])
        while len(out) < n and self.period:
            out.extend(self.period[: n - len(out)])
        return out

    def __str__(self):
        head = ", ".join(map(str, self.preperiod))
        if not self.period:
            if len(self.preperiod) <= 1:
                return f"[{head}]"
            return f"[{self.preperiod[0]}; {', '.join(map(str, self.preperiod[1:]))}]"
        per = ", ".join(map(str, self.period))
        return f"[{head}{'; ' if head else ''}({per})]"


def cf_of_rational(num: int, den: int) -> CFExpansion:
    """Raw Euclidean quotients; no rewriting of the last term."""
    if den <= 0:
        raise DomainError(f"denominator must be positive, got {den}")
    if num < 0:
        raise DomainError(f"numerator must be nonnegative, got {num}")
    if math.gcd(num, den) != 1:
        raise DomainError(f"{num}/{den} is not reduced")
    terms = []
    while den:
        n, rem = divmod(num, den)
        terms.append(n)
        num, den = den, rem
    return CFExpansion(tuple(terms))


def fold_cf(terms) -> Fraction:
    """Evaluate a finite continued fraction n0 + 1/(n1 + 1/(...))."""
    terms = list(terms)
    value = Fraction(terms[-1])
    for n in reversed(terms[:-1]):
        value = n + 1 / value
    return value


def cf_of_quad(a: Quad) -> CFExpansion:
    """
    Continued fraction of an irrational surd with exact period detection.

    The surd is rewritten as (P + sqrt(d))/Q with Q dividing d - P^2, after
    which each complete quotient is an integer state (P, Q). The first repeated
    state delimits the minimal preperiod and the minimal period.
    """
    if a.q == 0:
        raise DomainError("rational input: use cf_of_rational")
    d = a.q * a.q * a.D
    P, Q = (a.p, a.r) if a.q > 0 else (-a.p, -a.r)
    if (d - P * P) % Q:
        P, d, Q = P * abs(Q), d * Q * Q, Q * abs(Q)
    seen: dict[tuple[int, int], int] = {}
    terms: list[int] = []
    while (P, Q) not in seen:
        seen[P, Q] = len(terms)
        n = _floor_surd(P, d, Q)
        terms.append(n)
        P = n * Q - P
        Q = (d - P * P) // Q
    start = seen[P, Q]
    return CFExpansion(tuple(terms[:start]), tuple(terms[start:]))
