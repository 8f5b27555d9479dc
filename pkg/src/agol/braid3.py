"""
Three-strand braids through their image in SL(2,Z).

The image of a braid is taken with sigma_1 -> R and sigma_2 -> L^-1, and the
matrices of the letters are multiplied in reverse word order: the braid word
b_1 b_2 acts as the mapping class b_2 o b_1. With this choice the braid
sigma_1^p1 sigma_2^-q1 ... sigma_1^pk sigma_2^-qk maps to exactly
L^qk R^pk ... L^q1 R^p1, Delta maps to (0 1; -1 0) and the full twist to -I.

B_3 modulo its center is PSL(2,Z), and the center is detected by the exponent
sum, so (image, exponent sum) is a complete invariant of a 3-braid.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import BraidParseError, InvariantViolation, UnsupportedError
from .farey import L, R, Mat2, canonical_rotation, lr_cycle_of_matrix, matrix_of_pairs

PERIODIC = "periodic"
REDUCIBLE = "reducible"
PSEUDO_ANOSOV = "pseudo-anosov"

_IMAGE = {(1, 1): R, (1, -1): R.inverse(), (2, 1): L.inverse(), (2, -1): L}
_TOKEN = re.compile(r"\s*(s1|s2|d)(?:\s*\^\s*([+-]?\d+))?\s*", re.IGNORECASE)
_DELTA = ((1, 1), (2, 1), (1, 1))


@dataclass(frozen=True)
class BraidWord:
    """Letters are (generator, sign) with generator in {1, 2} and sign +-1."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(g), int(e)) for g, e in self.letters))
        for g, e in self.letters:
            if g not in (1, 2) or e not in (1, -1):
                raise ValueError(f"bad letter {(g, e)}")

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        return parse_braid(text)

    @classmethod
    def from_powers(cls, powers) -> "BraidWord":
        """From (generator, exponent) pairs, generator 0 meaning Delta."""
        letters = []
        for g, k in powers:
            unit = _DELTA if g == 0 else ((g, 1),)
            if k < 0:
                unit = tuple((h, -e) for h, e in reversed(unit))
            letters.extend(unit * abs(k))
        return cls(tuple(letters))

    @classmethod
    def delta(cls, k: int = 1) -> "BraidWord":
        return cls.from_powers([(0, k)])

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        base = self if n >= 0 else self.inverse()
        return BraidWord(base.letters * abs(n))

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def conjugate_by(self, u: "BraidWord") -> "BraidWord":
        """u w u^-1."""
        return u + self + u.inverse()

    def free_reduce(self) -> "BraidWord":
        out: list[tuple[int, int]] = []
        for g, e in self.letters:
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        return BraidWord(tuple(out))

    @property
    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def __str__(self):
        if not self.letters:
            return ""
        runs: list[list[int]] = []
        for g, e in self.letters:
            if runs and runs[-1][0] == g and (runs[-1][1] > 0) == (e > 0):
                runs[-1][1] += e
            else:
                runs.append([g, e])
        return " ".join(f"s{g}" if k == 1 else f"s{g}^{k}" for g, k in runs)


def parse_braid(text: str) -> BraidWord:
    """
    Grammar: word := token*; token := ("s1" | "s2" | "D") ["^" integer].

    Case-insensitive; D is the half twist s1 s2 s1. Exponents are nonzero.
    """
    powers = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise BraidParseError("unknown token", text, bad)
        if m.group(2) is not None:
            k = int(m.group(2))
            if k == 0:
                raise BraidParseError("zero exponent", text, m.start(2))
        else:
            k = 1
        name = m.group(1).lower()
        powers.append((0 if name == "d" else int(name[1]), k))
        pos = m.end()
    return BraidWord.from_powers(powers)


def _as_braid(w) -> BraidWord:
    return parse_braid(w) if isinstance(w, str) else w


def rho_image(w: BraidWord | str) -> tuple[Mat2, int]:
    w = _as_braid(w)
    m = Mat2.identity()
    for letter in w.letters:
        # reverse word order: later letters act after earlier ones
        m = _IMAGE[letter] @ m
    return m, w.exponent_sum


@dataclass(frozen=True)
class PsaForm:
    """Delta^{2j} s1^p1 s2^-q1 ... s1^pk s2^-qk with pairs in canonical rotation."""

    j: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(p), int(q)) for p, q in self.pairs)
        if not pairs or any(p <= 0 or q <= 0 for p, q in pairs):
            raise ValueError(f"pairs must be a nonempty list of positive pairs, got {self.pairs}")
        object.__setattr__(self, "pairs", canonical_rotation(pairs))
        object.__setattr__(self, "j", int(self.j))

    @property
    def length(self) -> int:
        return sum(p + q for p, q in self.pairs)

    @property
    def matrix(self) -> Mat2:
        """A = L^qk R^pk ... L^q1 R^p1."""
        return matrix_of_pairs(self.pairs)

    def braid_word(self) -> BraidWord:
        powers = [(0, 2 * self.j)] if self.j else []
        for p, q in self.pairs:
            powers += [(1, p), (2, -q)]
        return BraidWord.from_powers(powers)

    def __str__(self):
        def power(g, k):
            return g if k == 1 else f"{g}^{k}"

        body = " ".join(f"{power('s1', p)} {power('s2', -q)}" for p, q in self.pairs)
        return f"D^{2 * self.j} {body}" if self.j else body


@dataclass(frozen=True)
class Classification:
    kind: str
    form: PsaForm | None = field(default=None)

    @property
    def is_pseudo_anosov(self) -> bool:
        return self.kind == PSEUDO_ANOSOV


def classify(w: BraidWord | str) -> Classification:
    w = _as_braid(w)
    m, _ = rho_image(w)
    t = abs(m.trace)
    if t > 2:
        return Classification(PSEUDO_ANOSOV, murasugi_form(w))
    if t < 2 or m in (Mat2.identity(), -Mat2.identity()):
        return Classification(PERIODIC)
    return Classification(REDUCIBLE)


def murasugi_form(w: BraidWord | str) -> PsaForm:
    w = _as_braid(w)
    m, e = rho_image(w)
    if abs(m.trace) <= 2:
        raise UnsupportedError(f"braid {w} is not pseudo-Anosov (trace {m.trace})")
    pairs, _ = lr_cycle_of_matrix(m)
    twist, rem = divmod(e - sum(p - q for p, q in pairs), 6)
    if rem:
        raise InvariantViolation(f"non-integral full-twist power for {w}")
    if (m.trace > 0) != (twist % 2 == 0):
        raise InvariantViolation(f"trace sign of {w} disagrees with Delta^{2 * twist}")
    return PsaForm(twist, pairs)


def _require_pa(w: BraidWord, name: str) -> PsaForm:
    c = classify(w)
    if not c.is_pseudo_anosov:
        raise UnsupportedError(f"{name} braid {str(w)!r} is {c.kind}, not pseudo-anosov")
    return c.form


def conjugate_mod_center(w1, w2) -> bool:
    """Conjugacy in B_3 / Z(B_3), decided by the cyclic pair lists."""
    f1 = _require_pa(_as_braid(w1), "first")
    f2 = _require_pa(_as_braid(w2), "second")
    return f1.pairs == f2.pairs


def conjugate_in_b3(w1, w2) -> bool:
    f1 = _require_pa(_as_braid(w1), "first")
    f2 = _require_pa(_as_braid(w2), "second")
    return f1 == f2
