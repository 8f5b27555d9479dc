"""
SL(2,Z) matrices, the positive L/R monoid and Farey intervals.

Conventions: L = (1 0; 1 1), R = (1 1; 0 1). Matrices act on column vectors
(x, y) and the slope of (x, y) is y/x. The Farey interval [b/a, d/c] is the
matrix whose first column is (a, b) and whose second column is (c, d).
Taking the right half of an interval multiplies its matrix by L on the right;
taking the left half multiplies by R.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidParseError, DomainError, InvariantViolation, NotHyperbolicError
from .surd import Quad, cf_of_quad


@dataclass(frozen=True)
class Mat2:
    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if self.det != 1:
            raise DomainError(f"determinant must be 1, got {self.det} for {self.rows}")

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def trace(self) -> int:
        return self.m11 + self.m22

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.m11, self.m12), (self.m21, self.m22)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.m11, -self.m12, -self.m21, -self.m22)

    def inverse(self) -> "Mat2":
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def __pow__(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = Mat2.identity()
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def apply(self, x, y):
        return self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y

    def __str__(self):
        return f"({self.m11} {self.m12}; {self.m21} {self.m22})"


L = Mat2(1, 0, 1, 1)
R = Mat2(1, 1, 0, 1)
IDENTITY = Mat2.identity()
_LETTER = {"L": L, "R": R}


@dataclass(frozen=True)
class LRWord:
    """A positive word in L and R stored as blocks (letter, exponent)."""

    blocks: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for i, (letter, exp) in enumerate(self.blocks):
            if letter not in _LETTER or exp <= 0:
                raise DomainError(f"bad block {(letter, exp)!r}")
            if i and self.blocks[i - 1][0] == letter:
                raise DomainError("adjacent blocks must use distinct letters")

    @classmethod
    def from_letters(cls, letters: Iterable[str]) -> "LRWord":
        blocks: list[list] = []
        for ch in letters:
            if blocks and blocks[-1][0] == ch:
                blocks[-1][1] += 1
            else:
                blocks.append([ch, 1])
        return cls(tuple((ch, n) for ch, n in blocks))

    @classmethod
    def parse(cls, text: str) -> "LRWord":
        """Accepts the compact form "LLRRRLR" and the block form "L^2 R^3 L^1 R^1"."""
        letters = []
        for ch, exp in _parse_tokens(text, allow_negative=False):
            letters.extend([ch] * exp)
        return cls.from_letters(letters)

    @property
    def letters(self) -> str:
        return "".join(ch * n for ch, n in self.blocks)

    def __len__(self):
        return sum(n for _, n in self.blocks)

    def __str__(self):
        return self.letters

    def block_form(self) -> str:
        return " ".join(f"{ch}^{n}" for ch, n in self.blocks)


_TOKEN = re.compile(r"\s*([LR])(?:\^(-?\d+))?\s*")


def _parse_tokens(text: str, allow_negative: bool):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise BraidParseError("unexpected character", text, pos)
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0 or (exp < 0 and not allow_negative):
            raise BraidParseError("bad exponent", text, m.start(2))
        out.append((m.group(1), exp))
        pos = m.end()
    return out


def parse_sl2_word(text: str) -> Mat2:
    """Evaluate a word in L, R with signed exponents, e.g. "R^2 L R R^-2"."""
    m = Mat2.identity()
    for ch, exp in _parse_tokens(text, allow_negative=True):
        m = m @ _LETTER[ch] ** exp
    return m


def mat_of_word(word: LRWord | str) -> Mat2:
    if isinstance(word, str):
        word = LRWord.parse(word)
    m = Mat2.identity()
    for ch, n in word.blocks:
        m = m @ _LETTER[ch] ** n
    return m


@dataclass(frozen=True)
class FareyInterval:
    """The interval [b/a, d/c] with nonnegative entries and ad - bc = 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0 or self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"not a Farey interval: {(self.a, self.b, self.c, self.d)}")

    @classmethod
    def base(cls) -> "FareyInterval":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_endpoints(cls, left, right) -> "FareyInterval":
        """Endpoints as (num, den) pairs; (1, 0) stands for infinity."""
        (b, a), (d, c) = left, right
        return cls(a, b, c, d)

    @classmethod
    def from_matrix(cls, m: Mat2) -> "FareyInterval":
        return cls(m.m11, m.m21, m.m12, m.m22)

    @property
    def matrix(self) -> Mat2:
        return Mat2(self.a, self.c, self.b, self.d)

    @property
    def left(self) -> tuple[int, int]:
        return self.b, self.a

    @property
    def right(self) -> tuple[int, int]:
        return self.d, self.c

    def __str__(self):
        return f"[{self.b}/{self.a}, {self.d}/{self.c}]"


def halve(f: FareyInterval, side: str) -> FareyInterval:
    """side is "right-half" (matrix times L) or "left-half" (matrix times R)."""
    if side in ("right-half", "r-half", "r"):
        return FareyInterval(f.a + f.c, f.b + f.d, f.c, f.d)
    if side in ("left-half", "l-half", "l"):
        return FareyInterval(f.a, f.b, f.a + f.c, f.b + f.d)
    raise DomainError(f"unknown side {side!r}")


def halving_chain(f: FareyInterval) -> list[FareyInterval]:
    """The nested intervals from [0/1, 1/0] down to f, both ends included."""
    if not isinstance(f, FareyInterval):
        raise DomainError("expected a FareyInterval")
    chain = [FareyInterval.base()]
    cur = chain[0]
    tb, ta, td, tc = f.b, f.a, f.d, f.c
    while cur != f:
        mb, ma = cur.b + cur.d, cur.a + cur.c
        # target lies in [mediant, right] iff its left endpoint is >= the mediant
        if tb * ma >= mb * ta:
            cur = halve(cur, "right-half")
        else:
            cur = halve(cur, "left-half")
        if cur.a > ta + tc or cur.b > tb + td:
            raise InvariantViolation(f"descent overshot {f}")
        chain.append(cur)
    return chain


def word_of_interval(f: FareyInterval) -> LRWord:
    chain = halving_chain(f)
    # r-half becomes L, l-half becomes R
    letters = ["R" if (nxt.a, nxt.b) == (cur.a, cur.b) else "L" for cur, nxt in zip(chain, chain[1:])]
    return LRWord.from_letters(letters)


def interval_of_word(word: LRWord | str) -> FareyInterval:
    return FareyInterval.from_matrix(mat_of_word(word))


def positive_word_of_matrix(m: Mat2) -> LRWord:
    """Inverse of mat_of_word on the positive monoid."""
    return word_of_interval(FareyInterval.from_matrix(m))


def eigen_data(m: Mat2) -> tuple[Quad, Quad]:
    """Expanding eigenvalue and the slope y/x of its eigenvector, for trace > 2."""
    t = m.trace
    if t <= 2:
        raise NotHyperbolicError(f"trace {t} <= 2 for {m}")
    D = t * t - 4
    lam = Quad(t, 1, 2, D)
    if m.m12 == 0:
        # det 1 with m12 = 0 forces m11 = m22 = +-1, i.e. |trace| = 2
        raise InvariantViolation(f"m12 = 0 with trace {t}")
    slope = (lam - m.m11) / m.m12
    return lam, slope


def canonical_rotation(pairs: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    pairs = [tuple(p) for p in pairs]
    if not pairs:
        return ()
    return min(tuple(pairs[i:] + pairs[:i]) for i in range(len(pairs)))


def word_of_pairs(pairs: Sequence[tuple[int, int]]) -> LRWord:
    """L^{q_k} R^{p_k} ... L^{q_1} R^{p_1} for pairs ((p_1, q_1), ..., (p_k, q_k))."""
    letters = []
    for p, q in reversed(pairs):
        letters.append("L" * q + "R" * p)
    return LRWord.from_letters("".join(letters))


def matrix_of_pairs(pairs: Sequence[tuple[int, int]]) -> Mat2:
    return mat_of_word(word_of_pairs(pairs))


def lr_cycle_of_matrix(m: Mat2) -> tuple[tuple[tuple[int, int], ...], int]:
    """
    Cyclic pairs ((p_1,q_1),...,(p_k,q_k)) with +-m conjugate to
    L^{q_k} R^{p_k} ... L^{q_1} R^{p_1}, plus the power n of the primitive root.

    The expanding eigenslope s of m0 = +-m (trace > 2) has an eventually
    periodic continued fraction. If the preperiod has length j, then
    (1, s) = P (1, s_j) when j is even and P (s_j, 1) when j is odd, for some
    P in SL(2,Z) built from the preperiod. The periodic tail therefore reads
    L^{m0} R^{m1} ... for even j and R^{m0} L^{m1} ... for odd j, so an odd
    preperiod rotates the period by one before pairing. An odd minimal period
    is doubled; the two halves then carry opposite letters and the rotation
    only permutes pairs cyclically. The resulting word W is the primitive
    positive root, and m0 = (P W P^-1)^n with n found by matching traces.
    """
    t = m.trace
    if abs(t) <= 2:
        raise NotHyperbolicError(f"|trace| = {abs(t)} <= 2 for {m}")
    m0 = m if t > 2 else -m
    _, slope = eigen_data(m0)
    cf = cf_of_quad(slope)
    period = list(cf.period)
    if len(period) % 2:
        period = period * 2
    if len(cf.preperiod) % 2:
        period = period[1:] + period[:1]
    base = tuple((period[i + 1], period[i]) for i in range(0, len(period), 2))[::-1]
    w = matrix_of_pairs(base)
    target = m0.trace
    n, power = 1, w
    while power.trace < target:
        power = power @ w
        n += 1
    if power.trace != target:
        raise InvariantViolation(f"no power of {w} has trace {target}")
    return canonical_rotation(base * n), n


def pairs_of_word(word: LRWord | str) -> tuple[tuple[int, int], ...]:
    """Canonical cyclic pairs read off a positive word containing both letters."""
    letters = word.letters if isinstance(word, LRWord) else LRWord.parse(word).letters
    if "L" not in letters or "R" not in letters:
        raise NotHyperbolicError(f"{letters!r} needs both letters")
    # rotate so the word starts with an L-block and ends with an R-block
    i = next(k for k in range(len(letters)) if letters[k] == "L" and letters[k - 1] == "R")
    blocks = LRWord.from_letters(letters[i:] + letters[:i]).blocks
    pairs = [(blocks[k + 1][1], blocks[k][1]) for k in range(0, len(blocks), 2)]
    return canonical_rotation(pairs[::-1])
