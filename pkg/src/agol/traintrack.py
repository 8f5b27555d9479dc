"""
Measured Mosher train tracks, maximal splittings and Agol cycles.

A track is recorded only by its Farey interval and its measure (x, y): x is the
weight of the small branch coming from the left endpoint curve, y the weight of
the one from the right endpoint curve, and the large branch carries x + y.
A left splitting needs y > x and sends (x, y) to (x, y - x) while taking the
right half of the interval; a right splitting needs x > y, sends (x, y) to
(x - y, y) and takes the left half.

On the four-punctured sphere the track has two large branches of equal weight
that split together; the interval and (x, y) bookkeeping is the same as on the
once-punctured torus, and one simultaneous splitting counts as one step.

Weights may be Quad, int or Fraction; all comparisons are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .braid3 import PsaForm
from .errors import AmbiguousSplitError, DomainError, InvariantViolation, NotSplittableError
from .farey import FareyInterval, Mat2, eigen_data, halve, lr_cycle_of_matrix, mat_of_word
from .surd import Quad, cf_of_rational

TORUS = "torus"
SPHERE4 = "sphere4"
SURFACES = (TORUS, SPHERE4)


def _check_surface(surface: str) -> str:
    surface = surface.lower()
    if surface not in SURFACES:
        raise DomainError(f"unknown surface {surface!r}")
    return surface


@dataclass(frozen=True)
class MeasuredTrack:
    surface: str
    interval: FareyInterval
    x: object
    y: object
    terminal: bool = False

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise DomainError(f"negative weight in ({self.x}, {self.y})")
        if not self.x and not self.y:
            raise DomainError("both weights are zero")
        if (not self.x or not self.y) and not self.terminal:
            raise DomainError("a zero weight is only allowed at a terminal collapse state")

    @property
    def measure(self) -> tuple:
        return self.x, self.y


@dataclass(frozen=True)
class SplitStep:
    side: str
    interval_after: FareyInterval
    measure_after: tuple


def base_track(surface: str, x, y) -> MeasuredTrack:
    return MeasuredTrack(_check_surface(surface), FareyInterval.base(), x, y)


def split(t: MeasuredTrack, side: str, extended: bool = False) -> MeasuredTrack:
    x, y = t.x, t.y
    if side == "L":
        if not (y > x or (extended and y == x)):
            raise NotSplittableError(f"left splitting needs y > x, got x={x}, y={y}")
        nx, ny, interval = x, y - x, halve(t.interval, "right-half")
    elif side == "R":
        if not (x > y or (extended and x == y)):
            raise NotSplittableError(f"right splitting needs x > y, got x={x}, y={y}")
        nx, ny, interval = x - y, y, halve(t.interval, "left-half")
    else:
        raise DomainError(f"side must be 'L' or 'R', got {side!r}")
    return MeasuredTrack(t.surface, interval, nx, ny, terminal=not nx or not ny)


def max_split_run(t: MeasuredTrack, extended: bool = False) -> tuple[str, int, MeasuredTrack]:
    """
    Split on the same side for as long as the inequality allows.

    Without `extended` this stops as soon as the weights are equal or reversed;
    with it, an equal pair is split once more down to a zero weight.
    """
    if t.x == t.y and not extended:
        raise AmbiguousSplitError(f"equal weights {t.x}: neither splitting is maximal")
    side = "L" if t.y >= t.x else "R"
    count = 0
    cur = t
    while True:
        bigger, smaller = (cur.y, cur.x) if side == "L" else (cur.x, cur.y)
        if not smaller or not (bigger > smaller or (extended and bigger == smaller)):
            break
        cur = split(cur, side, extended)
        count += 1
    return side, count, cur


@dataclass(frozen=True)
class AgolCycle:
    surface: str
    form: PsaForm
    initial: MeasuredTrack
    steps: tuple[SplitStep, ...]
    matrix: Mat2
    lam: Quad
    slope: Quad
    verified: bool = False

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def side_word(self) -> str:
        return "".join(s.side for s in self.steps)

    @property
    def final_measure(self) -> tuple:
        return self.steps[-1].measure_after if self.steps else self.initial.measure


def agol_cycle(form: PsaForm, surface: str = TORUS) -> AgolCycle:
    """
    Agol cycle of the braid Delta^{2j} s1^p1 s2^-q1 ... (Sphere4) or of the
    torus map of A = L^qk R^pk ... L^q1 R^p1 (Torus), started at (1, s).

    The full twist acts trivially on (interval, measure), so j is ignored.
    """
    surface = _check_surface(surface)
    a = form.matrix
    lam, s = eigen_data(a)
    cur = base_track(surface, Quad.rational(1, s.D), s)
    initial = cur
    steps = []
    for p, q in reversed(form.pairs):
        for side, count in (("L", q), ("R", p)):
            got_side, got_count, _ = max_split_run(cur)
            if (got_side, got_count) != (side, count):
                raise InvariantViolation(
                    f"maximal run {got_side}^{got_count} disagrees with prescribed {side}^{count}")
            for _ in range(count):
                cur = split(cur, side)
                steps.append(SplitStep(side, cur.interval, cur.measure))
    cycle = AgolCycle(surface, form, initial, tuple(steps), a, lam, s)
    return replace(cycle, verified=_closes(cycle))


def agol_cycle_of_matrix(m: Mat2, surface: str = TORUS) -> AgolCycle:
    pairs, _ = lr_cycle_of_matrix(m)
    return agol_cycle(PsaForm(0, pairs), surface)


def _closes(c: AgolCycle) -> bool:
    inv = c.lam.inverse()
    x0, y0 = c.initial.measure
    xl, yl = c.final_measure
    interval = c.steps[-1].interval_after if c.steps else c.initial.interval
    return (xl, yl) == (inv * x0, inv * y0) and interval.matrix == c.matrix


@dataclass
class CycleReport:
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def lines(self) -> list[str]:
        return [f"{'PASS' if v else 'FAIL'} {k}" for k, v in self.checks.items()]


def verify_cycle(c: AgolCycle) -> CycleReport:
    """Recompute the cycle from its initial track and check every closure identity."""
    rep = CycleReport()
    cur = c.initial
    replay = True
    for st in c.steps:
        try:
            cur = split(cur, st.side)
        except NotSplittableError:
            replay = False
            break
        if cur.interval != st.interval_after or cur.measure != st.measure_after:
            replay = False
            break
    rep.checks["steps replay from the initial track"] = replay
    rep.checks["length equals sum of pair entries"] = c.length == c.form.length
    inv = c.lam.inverse()
    rep.checks["lambda * lambda^-1 = 1"] = c.lam * inv == 1
    rep.checks["eigen equation A(1,s) = lambda(1,s)"] = c.matrix.apply(1, c.slope) == (c.lam, c.lam * c.slope)
    x0, y0 = c.initial.measure
    xl, yl = c.final_measure
    rep.checks["final measure = lambda^-1 * initial measure"] = (xl, yl) == (inv * x0, inv * y0)
    rep.checks["A * final measure = initial measure"] = c.matrix.apply(xl, yl) == (x0, y0)
    interval = c.steps[-1].interval_after if c.steps else c.initial.interval
    rep.checks["final interval corresponds to A"] = interval.matrix == c.matrix
    try:
        other = agol_cycle_of_matrix(-c.matrix, c.surface)
        same = [(s.side, s.interval_after, s.measure_after) for s in other.steps] == \
               [(s.side, s.interval_after, s.measure_after) for s in c.steps]
    except DomainError:
        same = False
    rep.checks["cycle of -A is step-identical"] = same
    return rep


@dataclass(frozen=True)
class CollapseResult:
    surface: str
    start: MeasuredTrack
    steps: tuple[SplitStep, ...]
    terminal_interval: FareyInterval
    terminal_measure: tuple
    curve_slope: Fraction

    @property
    def side_word(self) -> str:
        return "".join(s.side for s in self.steps)


def rational_collapse(num: int, den: int, surface: str = TORUS) -> CollapseResult:
    """
    Split (tau_0, (den, num)) down to the simple closed curve of slope num/den.

    The blocks are L^n0 R^n1 L^n2 ... from the raw continued fraction, an
    n0 = 0 block is skipped, and the final block is an extended splitting that
    ends with one weight equal to zero.
    """
    if num <= 0 or den <= 0:
        raise DomainError(f"slope must lie in (0, inf), got {num}/{den}")
    if math.gcd(num, den) != 1:
        raise DomainError(f"{num}/{den} is not reduced")
    terms = cf_of_rational(num, den).preperiod
    cur = base_track(surface, den, num)
    start = cur
    steps = []
    for i, n in enumerate(terms):
        if n == 0:
            continue
        last = i == len(terms) - 1
        side, count, _ = max_split_run(cur, extended=last)
        want = "L" if i % 2 == 0 else "R"
        if (side, count) != (want, n):
            raise InvariantViolation(f"block {i}: got {side}^{count}, expected {want}^{n}")
        for _ in range(n):
            cur = split(cur, side, extended=last)
            steps.append(SplitStep(side, cur.interval, cur.measure))
    f = cur.interval
    word = "".join(s.side for s in steps)
    if f.matrix != mat_of_word(word):
        raise InvariantViolation("terminal interval does not match the splitting word")
    slope = Fraction(f.b, f.a) if cur.y == 0 else Fraction(f.d, f.c)
    return CollapseResult(cur.surface, start, tuple(steps), f, cur.measure, slope)
