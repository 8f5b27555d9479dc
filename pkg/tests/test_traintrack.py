from fractions import Fraction

import pytest

from agol.braid3 import PsaForm
from agol.errors import DomainError, NotSplittableError
from agol.farey import FareyInterval, Mat2, mat_of_word
from agol.surd import Quad
from agol.traintrack import (
    SPHERE4,
    TORUS,
    agol_cycle,
    agol_cycle_of_matrix,
    base_track,
    max_split_run,
    rational_collapse,
    split,
    verify_cycle,
)

from conftest import random_form

PHI = Quad(1, 1, 2, 5)


def test_base_track():
    t = base_track(TORUS, 1, PHI)
    assert t.interval == FareyInterval.base()
    assert t.measure == (1, PHI)
    assert base_track(SPHERE4, 7, 10).measure == (7, 10)
    with pytest.raises(DomainError):
        base_track(TORUS, -1, 2)
    with pytest.raises(DomainError):
        base_track("klein", 1, 2)


def test_single_splits():
    t = base_track(TORUS, 3, 5)
    left = split(t, "L")
    assert left.measure == (3, 2)
    assert left.interval == FareyInterval.from_endpoints((1, 1), (1, 0))
    with pytest.raises(NotSplittableError):
        split(t, "R")
    with pytest.raises(NotSplittableError):
        split(base_track(TORUS, 2, 2), "L")


def test_max_split_run():
    side, count, t = max_split_run(base_track(TORUS, 2, 7))
    assert (side, count) == ("L", 3)
    assert t.measure == (2, 1)


def test_golden_cycle():
    c = agol_cycle(PsaForm(0, [(1, 1)]))
    assert c.verified
    assert c.side_word == "LR"
    assert c.lam == Quad(3, 1, 2, 5)
    assert c.slope == PHI
    assert [s.measure_after for s in c.steps] == [(1, PHI - 1), (2 - PHI, PHI - 1)]
    assert c.steps[-1].interval_after == FareyInterval.from_endpoints((1, 1), (2, 1))
    assert verify_cycle(c).ok


def test_cycle_of_matrix_matches_form():
    c = agol_cycle_of_matrix(mat_of_word("LRR"))
    assert c.form.pairs == ((2, 1),)
    assert c.verified


def test_random_cycles_close(rng):
    for _ in range(60):
        form = random_form(rng, 20)
        torus = agol_cycle(form, TORUS)
        sphere = agol_cycle(form, SPHERE4)
        rep = verify_cycle(torus)
        assert rep.ok, rep.lines()
        assert torus.length == form.length
        assert [(s.side, s.interval_after, s.measure_after) for s in torus.steps] == \
               [(s.side, s.interval_after, s.measure_after) for s in sphere.steps]


def test_full_twist_is_ignored():
    a = agol_cycle(PsaForm(0, [(2, 3)]))
    b = agol_cycle(PsaForm(-3, [(2, 3)]))
    assert a.steps == b.steps


def test_collapse_worked_example():
    c = rational_collapse(10, 7)
    assert c.side_word == "LRRLLL"
    weights = [c.start.measure] + [s.measure_after for s in c.steps]
    assert weights == [(7, 10), (7, 3), (4, 3), (1, 3), (1, 2), (1, 1), (1, 0)]
    assert c.terminal_interval == FareyInterval.from_endpoints((10, 7), (3, 2))
    assert c.curve_slope == Fraction(10, 7)


def test_collapse_small_slopes():
    c = rational_collapse(1, 2)
    assert c.side_word == "RR"
    assert c.terminal_measure == (0, 1)
    assert c.curve_slope == Fraction(1, 2)
    assert rational_collapse(1, 1).side_word == "L"
    with pytest.raises(DomainError):
        rational_collapse(2, 4)
    with pytest.raises(DomainError):
        rational_collapse(0, 1)


def test_collapse_properties(rng):
    for _ in range(200):
        num, den = rng.randint(1, 500), rng.randint(1, 500)
        f = Fraction(num, den)
        c = rational_collapse(f.numerator, f.denominator)
        x, y = c.terminal_measure
        assert (x == 0) != (y == 0)
        assert c.curve_slope == f
        assert c.terminal_interval.matrix == mat_of_word(c.side_word)
        assert all(v >= 0 for s in c.steps for v in s.measure_after)


def test_cycle_of_negative_matrix():
    m = mat_of_word("LLRLR")
    assert agol_cycle_of_matrix(-m).steps == agol_cycle_of_matrix(m).steps
    with pytest.raises(DomainError):
        agol_cycle_of_matrix(Mat2(1, 1, 0, 1))
