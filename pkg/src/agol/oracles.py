"""
Independent brute-force validators.

None of these share code paths with the routines they check: conjugacy is
searched over bounded integer matrices, continued fractions are recomputed by
floor/invert iteration with interval-arithmetic floors, and Garside normal
forms are recovered by enumerating all positive words equal to a braid.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

import mpmath
from mpmath.ctx_iv import MPIntervalContext

from .errors import DomainError
from .farey import Mat2
from .surd import Quad

DEFAULT_BOUND = 20
FOUND = "witness-found"
INCONCLUSIVE = "inconclusive-negative"


def default_bound() -> int:
    return int(os.environ.get("AGOL_ORACLE_BOUND", DEFAULT_BOUND))


@dataclass(frozen=True)
class ConjugacyReport:
    verdict: str
    bound: int
    witness: Mat2 | None = None
    sign: int = 1

    @property
    def found(self) -> bool:
        return self.verdict == FOUND


def sl2_conjugacy(m1: Mat2, m2: Mat2, bound: int | None = None, mod_sign: bool = False) -> ConjugacyReport:
    """
    Search P in SL(2,Z) with |entries| <= bound and P m1 P^-1 = m2
    (or = -m2 when mod_sign is set).

    P m1 = m2 P is linear in P = (a b; c d). When m2 has m12 != 0 the first row
    of that equation fixes c and d from (a, b), so the box is swept over (a, b).
    """
    bound = default_bound() if bound is None else bound
    targets = [(1, m2)] + ([(-1, -m2)] if mod_sign else [])
    for sign, n in targets:
        if m1.trace != n.trace:
            continue
        for p in _search(m1, n, bound):
            return ConjugacyReport(FOUND, bound, p, sign)
    return ConjugacyReport(INCONCLUSIVE, bound)


def _search(m: Mat2, n: Mat2, bound: int):
    rng = range(-bound, bound + 1)
    if n.m12 != 0:
        for a in rng:
            for b in rng:
                cn = a * (m.m11 - n.m11) + b * m.m21
                dn = a * m.m12 + b * (m.m22 - n.m11)
                if cn % n.m12 or dn % n.m12:
                    continue
                c, d = cn // n.m12, dn // n.m12
                if abs(c) <= bound and abs(d) <= bound and a * d - b * c == 1:
                    p = Mat2(a, b, c, d)
                    if p @ m == n @ p:
                        yield p
        return
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    if a * d - b * c == 1:
                        p = Mat2(a, b, c, d)
                        if p @ m == n @ p:
                            yield p


def interval_of(a: Quad, prec: int = 53) -> tuple:
    """Rigorous enclosure (lo, hi) of a surd at the given binary precision."""
    ctx = MPIntervalContext()
    ctx.prec = prec
    x = (ctx.mpf(a.p) + ctx.mpf(a.q) * ctx.sqrt(ctx.mpf(a.D))) / ctx.mpf(a.r)
    # convert the raw endpoints without rounding them back to 53 bits
    with mpmath.workprec(prec):
        return mpmath.mpf(x._mpi_[0]), mpmath.mpf(x._mpi_[1])


def interval_sign(a: Quad, prec: int = 53) -> int | None:
    """Sign read off the enclosure, or None when the enclosure straddles 0."""
    lo, hi = interval_of(a, prec)
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    if lo == 0 and hi == 0:
        return 0
    return None


def _interval_floor(a: Quad) -> int:
    if a.q == 0:
        return a.p // a.r
    prec = 64
    while prec < 1 << 16:
        lo, hi = interval_of(a, prec)
        if int(mpmath.floor(lo)) == int(mpmath.floor(hi)):
            return int(mpmath.floor(lo))
        prec *= 2
    raise DomainError(f"could not separate floor of {a}")


def cf_iterate(a: Quad, terms: int = 10) -> list[int]:
    """Partial quotients by x -> 1/(x - floor x), floors decided by intervals."""
    out = []
    x = a
    for _ in range(terms):
        n = _interval_floor(x)
        out.append(n)
        frac = x - n
        if not frac:
            break
        x = 1 / frac
    return out


# --- Garside brute force -------------------------------------------------------

_DELTA_WORDS = ("121", "212")
MAX_CLASS = 200_000


def positive_class(word: str, limit: int = MAX_CLASS) -> set[str]:
    """All positive words in {"1","2"} equal to `word` in the braid monoid."""
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 2):
            chunk = w[i:i + 3]
            if chunk in _DELTA_WORDS:
                v = w[:i] + ("212" if chunk == "121" else "121") + w[i + 3:]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > limit:
                        raise DomainError("positive word class too large for brute force")
                    queue.append(v)
    return seen


_SIMPLE_WORDS = {"": "e", "1": "s1", "2": "s2", "12": "s1s2", "21": "s2s1", "121": "D", "212": "D"}


def brute_normal_form(word: str) -> tuple[int, list[str]]:
    """
    Left normal form of a positive word by greedy maximal simple prefixes.

    The next factor is the longest simple element that prefixes some word in
    the equivalence class of the remainder.
    """
    inf = 0
    factors = []
    cls = positive_class(word)
    while True:
        best = ""
        for prefix in ("121", "12", "21", "1", "2"):
            if len(prefix) > len(best) and any(w.startswith(prefix) for w in cls):
                best = prefix
        if not best:
            break
        if best == "121":
            if factors:
                raise DomainError("Delta found after a proper factor")
            inf += 1
        else:
            factors.append(_SIMPLE_WORDS[best])
        rest = next(w for w in cls if w.startswith(best))[len(best):]
        cls = positive_class(rest)
    return inf, factors


def garside_bruteforce(letters) -> tuple[int, list[str]]:
    """
    Normal form of a short signed word via central full twists.

    Each inverse letter s_i^-1 is traded for s_i^-1 Delta^2, a positive word,
    and the borrowed Delta^2 are returned through the infimum.
    """
    # s_i^-1 Delta^2: Delta^2 = s_i X with X positive, so s_i^-1 Delta^2 = X
    tail = {1: "21121", 2: "12212"}
    out = []
    borrowed = 0
    for g, e in letters:
        if e > 0:
            out.append(str(g))
        else:
            out.append(tail[g])
            borrowed += 1
    inf, factors = brute_normal_form("".join(out))
    return inf - 2 * borrowed, factors
