"""
Garside left normal forms in B_3.

The six simple elements are tabulated by hand. A normal form is
Delta^inf P_1 ... P_s with every P_i a proper simple (neither e nor Delta) and
every adjacent pair left-weighted: S(P_{i+1}) is contained in F(P_i), where S
and F are the starting and finishing sets of generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid3 import BraidWord, parse_braid
from .errors import InvariantViolation

E, S1, S2, S12, S21, DELTA = "e", "s1", "s2", "s1s2", "s2s1", "D"
SIMPLES = (E, S1, S2, S12, S21, DELTA)

WORD = {E: (), S1: (1,), S2: (2,), S12: (1, 2), S21: (2, 1), DELTA: (1, 2, 1)}
STARTS = {E: frozenset(), S1: {1}, S2: {2}, S12: {1}, S21: {2}, DELTA: {1, 2}}
FINISHES = {E: frozenset(), S1: {1}, S2: {2}, S12: {2}, S21: {1}, DELTA: {1, 2}}
# conjugation by Delta swaps the generators
FLIP = {E: E, S1: S2, S2: S1, S12: S21, S21: S12, DELTA: DELTA}
# x * s_i for i not in F(x)
TIMES_GEN = {(E, 1): S1, (E, 2): S2, (S1, 2): S12, (S2, 1): S21, (S12, 1): DELTA, (S21, 2): DELTA}
# s_i^-1 * x for i in S(x)
GEN_DIVIDES = {(S1, 1): E, (S2, 2): E, (S12, 1): S2, (S21, 2): S1, (DELTA, 1): S21, (DELTA, 2): S12}
# s_i^-1 = Delta^-1 * (complement)
INVERSE_TAIL = {1: S12, 2: S21}


def flip(x: str, times: int = 1) -> str:
    return FLIP[x] if times % 2 else x


def is_left_weighted(a: str, b: str) -> bool:
    return STARTS[b] <= FINISHES[a]


def slide(a: str, b: str) -> tuple[str, str]:
    """Move generators from the front of b onto the end of a until (a, b) is left-weighted."""
    while True:
        movable = STARTS[b] - FINISHES[a]
        if not movable:
            return a, b
        i = min(movable)
        a, b = TIMES_GEN[a, i], GEN_DIVIDES[b, i]


@dataclass(frozen=True)
class GarsideNF:
    inf: int
    factors: tuple[str, ...] = ()

    def __post_init__(self):
        for f in self.factors:
            if f not in (S1, S2, S12, S21):
                raise InvariantViolation(f"improper factor {f!r} in normal form")
        for a, b in zip(self.factors, self.factors[1:]):
            if not is_left_weighted(a, b):
                raise InvariantViolation(f"pair ({a}, {b}) is not left-weighted")

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def braid_word(self) -> BraidWord:
        letters = list(BraidWord.delta(self.inf).letters)
        for f in self.factors:
            letters.extend((g, 1) for g in WORD[f])
        return BraidWord(tuple(letters))

    def __str__(self):
        head = f"D^{self.inf}" if self.inf != 1 else "D"
        if not self.factors:
            return head
        return " . ".join([head] + list(self.factors))


def _normalize(inf: int, factors: list[str]) -> GarsideNF:
    """Left-weight a positive sequence of simples behind Delta^inf."""
    factors = list(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = slide(factors[i], factors[i + 1])
            if (a, b) != (factors[i], factors[i + 1]):
                factors[i], factors[i + 1] = a, b
                changed = True
    # left-weighting pushes Delta to the front and e to the back
    while factors and factors[0] == DELTA:
        factors.pop(0)
        inf += 1
    while factors and factors[-1] == E:
        factors.pop()
    if DELTA in factors or E in factors:
        raise InvariantViolation(f"unsorted factors {factors}")
    return GarsideNF(inf, tuple(factors))


def left_normal_form(w: BraidWord | str) -> GarsideNF:
    """
    Each s_i^-1 becomes Delta^-1 times a simple; every Delta^-1 is then moved
    to the far left, flipping all simples it passes, and the positive tail is
    left-weighted by local sliding.
    """
    if isinstance(w, str):
        w = parse_braid(w)
    letters = w.letters
    total_neg = sum(1 for _, e in letters if e < 0)
    seen_neg = 0
    factors = []
    for g, e in letters:
        if e < 0:
            seen_neg += 1
            simple = INVERSE_TAIL[g]
        else:
            simple = S1 if g == 1 else S2
        # this factor is passed by every later Delta^-1
        factors.append(flip(simple, total_neg - seen_neg))
    return _normalize(-total_neg, factors)


def canonical_length(nf: GarsideNF) -> int:
    return nf.canonical_length


def cycling(nf: GarsideNF) -> GarsideNF:
    """Conjugate Delta^r P_1 ... P_s to Delta^r P_2 ... P_s tau^r(P_1)."""
    if not nf.factors:
        return nf
    return _normalize(nf.inf, list(nf.factors[1:]) + [flip(nf.factors[0], nf.inf)])


def decycling(nf: GarsideNF) -> GarsideNF:
    """Conjugate Delta^r P_1 ... P_s to Delta^r tau^r(P_s) P_1 ... P_{s-1}."""
    if not nf.factors:
        return nf
    return _normalize(nf.inf, [flip(nf.factors[-1], nf.inf)] + list(nf.factors[:-1]))


# ||Delta|| in B_3: if inf (resp. sup) does not move within this many
# cyclings (decyclings) it is already extremal in the conjugacy class
DELTA_LENGTH = 3


def super_summit_representative(w: BraidWord | str) -> GarsideNF:
    if isinstance(w, str):
        w = parse_braid(w)
    nf = left_normal_form(w)
    cap = 10 * len(w) + 10
    nf = _saturate(nf, cycling, lambda x: x.inf, +1, cap)
    nf = _saturate(nf, decycling, lambda x: x.sup, -1, cap)
    return nf


def _saturate(nf, move, key, direction, cap):
    stale = 0
    for _ in range(cap):
        if stale >= DELTA_LENGTH or not nf.factors:
            return nf
        nxt = move(nf)
        if (key(nxt) - key(nf)) * direction > 0:
            stale = 0
        else:
            stale += 1
        nf = nxt
    if stale >= DELTA_LENGTH or not nf.factors:
        return nf
    raise InvariantViolation("cycling/decycling did not stabilise within the iteration cap")


def sss_canonical_length(w: BraidWord | str) -> int:
    return super_summit_representative(w).canonical_length
