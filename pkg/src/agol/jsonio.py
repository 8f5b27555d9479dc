"""JSON schemas for surds, intervals, normal forms and Agol cycles."""

from __future__ import annotations

from fractions import Fraction

from .braid3 import PsaForm
from .farey import FareyInterval, Mat2
from .garside import GarsideNF
from .surd import Quad
from .traintrack import AgolCycle, CollapseResult, MeasuredTrack, SplitStep


def quad_to_json(a: Quad) -> dict:
    return {
        "p": str(a.p),
        "q": str(a.q),
        "r": str(a.r),
        "D": str(a.D),
        "approx": format(a.to_decimal(30), ".12g"),
    }


def quad_from_json(obj: dict) -> Quad:
    # "approx" is informational and never read back
    return Quad(int(obj["p"]), int(obj["q"]), int(obj["r"]), int(obj["D"]))


def weight_to_json(v):
    if isinstance(v, Quad):
        return quad_to_json(v)
    v = Fraction(v)
    return str(v)


def interval_to_json(f: FareyInterval) -> dict:
    return {"a": f.a, "b": f.b, "c": f.c, "d": f.d}


def interval_from_json(obj: dict) -> FareyInterval:
    return FareyInterval(int(obj["a"]), int(obj["b"]), int(obj["c"]), int(obj["d"]))


def matrix_to_json(m: Mat2) -> list:
    return [[m.m11, m.m12], [m.m21, m.m22]]


def form_to_json(f: PsaForm) -> dict:
    return {"j": f.j, "pairs": [list(p) for p in f.pairs]}


def form_from_json(obj: dict) -> PsaForm:
    return PsaForm(int(obj["j"]), [tuple(p) for p in obj["pairs"]])


def cycle_to_json(c: AgolCycle) -> dict:
    return {
        "surface": c.surface,
        "normal_form": form_to_json(c.form),
        "matrix": matrix_to_json(c.matrix),
        "trace": c.matrix.trace,
        "D": str(c.lam.D),
        "lambda": quad_to_json(c.lam),
        "slope": quad_to_json(c.slope),
        "length": c.length,
        "steps": [
            {
                "side": s.side,
                "interval": interval_to_json(s.interval_after),
                "measure": {"x": quad_to_json(s.measure_after[0]), "y": quad_to_json(s.measure_after[1])},
            }
            for s in c.steps
        ],
        "verified": c.verified,
    }


def cycle_from_json(obj: dict) -> AgolCycle:
    lam = quad_from_json(obj["lambda"])
    slope = quad_from_json(obj["slope"])
    one = Quad.rational(1, slope.D)
    steps = tuple(
        SplitStep(
            s["side"],
            interval_from_json(s["interval"]),
            (quad_from_json(s["measure"]["x"]), quad_from_json(s["measure"]["y"])),
        )
        for s in obj["steps"]
    )
    return AgolCycle(
        surface=obj["surface"],
        form=form_from_json(obj["normal_form"]),
        initial=MeasuredTrack(obj["surface"], FareyInterval.base(), one, slope),
        steps=steps,
        matrix=Mat2.from_rows(obj["matrix"]),
        lam=lam,
        slope=slope,
        verified=bool(obj["verified"]),
    )


def collapse_to_json(c: CollapseResult) -> dict:
    return {
        "surface": c.surface,
        "slope": str(c.curve_slope),
        "word": c.side_word,
        "start": {"x": weight_to_json(c.start.x), "y": weight_to_json(c.start.y)},
        "steps": [
            {
                "side": s.side,
                "interval": interval_to_json(s.interval_after),
                "measure": {"x": weight_to_json(s.measure_after[0]), "y": weight_to_json(s.measure_after[1])},
            }
            for s in c.steps
        ],
        "terminal_interval": interval_to_json(c.terminal_interval),
        "terminal_measure": [weight_to_json(v) for v in c.terminal_measure],
    }


def garside_to_json(nf: GarsideNF) -> dict:
    return {"inf": nf.inf, "factors": list(nf.factors), "canonical_length": nf.canonical_length, "text": str(nf)}


def garside_from_json(obj: dict) -> GarsideNF:
    return GarsideNF(int(obj["inf"]), tuple(obj["factors"]))
