"""
Command line front end.

Every subcommand is a request handler returning a JSON-ready dict; the same
handlers serve `agol batch`, so a batch line and the matching subcommand with
--json print identical payloads. Exit codes: 0 success, 1 semantic failure,
2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .braid3 import classify, conjugate_in_b3, conjugate_mod_center, murasugi_form, parse_braid, rho_image
from .errors import AgolError, BraidParseError, InvariantViolation, UnsupportedError
from .farey import FareyInterval, halving_chain, parse_sl2_word, word_of_interval
from .garside import left_normal_form, sss_canonical_length
from .jsonio import collapse_to_json, cycle_to_json, form_to_json, garside_to_json, interval_to_json, matrix_to_json
from .oracles import cf_iterate, default_bound, garside_bruteforce, sl2_conjugacy
from .render import collapse_svg, cycle_svg
from .surd import Quad, cf_of_quad
from .traintrack import SURFACES, TORUS, agol_cycle, rational_collapse


class UsageError(AgolError):
    pass


def _fraction(text: str) -> tuple[int, int]:
    try:
        num, _, den = str(text).partition("/")
        return int(num), int(den or 1)
    except ValueError:
        raise UsageError(f"expected a fraction like 10/7, got {text!r}") from None


def _need(req: dict, key: str):
    if key not in req:
        raise UsageError(f"missing field {key!r}")
    return req[key]


def _pa_form(braid: str):
    c = classify(parse_braid(braid))
    if not c.is_pseudo_anosov:
        raise UnsupportedError(f"braid {braid!r} is {c.kind}, not pseudo-anosov")
    return c.form


def cmd_classify(req):
    c = classify(parse_braid(_need(req, "braid")))
    out = {"type": c.kind}
    if c.form is not None:
        out["normal_form"] = form_to_json(c.form)
    return out


def cmd_normal_form(req):
    form = murasugi_form(parse_braid(_need(req, "braid")))
    return {**form_to_json(form), "word": str(form.braid_word())}


def cmd_agol_cycle(req):
    form = _pa_form(_need(req, "braid"))
    return cycle_to_json(agol_cycle(form, req.get("surface", TORUS)))


def cmd_cycle_length(req):
    form = _pa_form(_need(req, "braid"))
    return {"length": agol_cycle(form, req.get("surface", TORUS)).length}


def cmd_conjugate(req):
    b1, b2 = _need(req, "braids")
    w1, w2 = parse_braid(b1), parse_braid(b2)
    if req.get("mod_center", False):
        return {"conjugate": conjugate_mod_center(w1, w2), "mod_center": True}
    return {"conjugate": conjugate_in_b3(w1, w2), "mod_center": False}


def cmd_garside(req):
    return garside_to_json(left_normal_form(parse_braid(_need(req, "braid"))))


def cmd_sss_length(req):
    return {"sss_length": sss_canonical_length(parse_braid(_need(req, "braid")))}


def cmd_farey_word(req):
    f = FareyInterval.from_endpoints(_fraction(_need(req, "left")), _fraction(_need(req, "right")))
    return {
        "word": str(word_of_interval(f)),
        "matrix": matrix_to_json(f.matrix),
        "chain": [interval_to_json(g) for g in halving_chain(f)],
    }


def cmd_collapse(req):
    num, den = _fraction(_need(req, "fraction"))
    return collapse_to_json(rational_collapse(num, den, req.get("surface", TORUS)))


def cmd_render(req):
    out = Path(_need(req, "out"))
    surface = req.get("surface", TORUS)
    if req.get("fraction"):
        num, den = _fraction(req["fraction"])
        svg = collapse_svg(rational_collapse(num, den, surface))
    else:
        svg = cycle_svg(agol_cycle(_pa_form(_need(req, "braid")), surface))
    out.write_text(svg)
    return {"written": str(out), "bytes": len(svg.encode())}


def _matrix_arg(text: str):
    try:
        return parse_sl2_word(text)
    except BraidParseError:
        return rho_image(parse_braid(text))[0]


def _quad_arg(text: str) -> Quad:
    try:
        p, q, r, d = (int(v) for v in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"expected a surd as p,q,r,D, got {text!r}") from None
    return Quad(p, q, r, d)


def cmd_oracle(req):
    kind = _need(req, "kind")
    args = list(req.get("args", []))
    if kind == "sl2-conjugacy":
        if len(args) != 2:
            raise UsageError("sl2-conjugacy takes two words")
        bound = int(req.get("bound") or default_bound())
        rep = sl2_conjugacy(_matrix_arg(args[0]), _matrix_arg(args[1]), bound, bool(req.get("mod_sign")))
        return {
            "kind": kind,
            "verdict": rep.verdict,
            "bound": rep.bound,
            "witness": matrix_to_json(rep.witness) if rep.witness else None,
            "sign": rep.sign,
        }
    if kind == "cf-iterate":
        if len(args) != 1:
            raise UsageError("cf-iterate takes one surd p,q,r,D")
        a = _quad_arg(args[0])
        n = int(req.get("terms") or 10)
        terms = cf_iterate(a, n)
        return {"kind": kind, "terms": terms, "agree": terms == cf_of_quad(a).terms(n)}
    if kind == "garside-bruteforce":
        if len(args) != 1:
            raise UsageError("garside-bruteforce takes one braid")
        w = parse_braid(args[0])
        if len(w) > 8:
            raise UsageError("garside-bruteforce handles at most 8 letters")
        inf, factors = garside_bruteforce(w.letters)
        nf = left_normal_form(w)
        return {"kind": kind, "inf": inf, "factors": factors,
                "agree": (inf, tuple(factors)) == (nf.inf, nf.factors)}
    raise UsageError(f"unknown oracle {kind!r}")


HANDLERS = {
    "classify": cmd_classify,
    "normal-form": cmd_normal_form,
    "agol-cycle": cmd_agol_cycle,
    "cycle-length": cmd_cycle_length,
    "conjugate": cmd_conjugate,
    "garside": cmd_garside,
    "sss-length": cmd_sss_length,
    "farey-word": cmd_farey_word,
    "collapse": cmd_collapse,
    "render": cmd_render,
    "oracle": cmd_oracle,
}


def _error_kind(exc: Exception) -> tuple[str, int]:
    if isinstance(exc, (BraidParseError, UsageError)):
        return ("parse" if isinstance(exc, BraidParseError) else "usage"), 2
    if isinstance(exc, InvariantViolation):
        return "internal", 1
    return "semantic", 1


def handle(req: dict) -> dict:
    """One batch request to one response; errors become error objects."""
    try:
        if not isinstance(req, dict):
            raise UsageError("request must be a JSON object")
        cmd = _need(req, "cmd")
        if cmd not in HANDLERS:
            raise UsageError(f"unknown cmd {cmd!r}")
        return HANDLERS[cmd](req)
    except (AgolError, ValueError, ZeroDivisionError) as exc:
        kind, _ = _error_kind(exc)
        return {"error": kind, "message": str(exc)}


def _batch_line(line: str) -> dict:
    try:
        req = json.loads(line)
    except json.JSONDecodeError as exc:
        return {"error": "parse", "message": f"malformed JSON: {exc.msg}"}
    return handle(req)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def run_batch(lines, jobs: int = 1) -> list[str]:
    lines = [ln for ln in lines if ln.strip()]
    if jobs <= 1:
        return [dumps(_batch_line(ln)) for ln in lines]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return [dumps(r) for r in pool.map(_batch_line, lines)]


# --- text rendering -------------------------------------------------------------

def _pairs_text(pairs) -> str:
    return " ".join(f"({p},{q})" for p, q in pairs)


def _text(cmd: str, out: dict) -> str:
    if cmd == "classify":
        if "normal_form" in out:
            nf = out["normal_form"]
            return f"{out['type']} j={nf['j']} pairs={_pairs_text(nf['pairs'])}"
        return out["type"]
    if cmd == "normal-form":
        return f"j={out['j']} pairs={_pairs_text(out['pairs'])}\n{out['word']}"
    if cmd == "agol-cycle":
        lines = [f"{out['surface']} Agol cycle, length {out['length']}, verified {str(out['verified']).lower()}",
                 f"A = {out['matrix']}  trace {out['trace']}",
                 f"lambda = {out['lambda']['approx']}  slope = {out['slope']['approx']}"]
        for i, s in enumerate(out["steps"], 1):
            iv = s["interval"]
            lines.append(f"{i:3d} {s['side']} [{iv['b']}/{iv['a']}, {iv['d']}/{iv['c']}] "
                         f"x={s['measure']['x']['approx']} y={s['measure']['y']['approx']}")
        return "\n".join(lines)
    if cmd == "cycle-length":
        return str(out["length"])
    if cmd == "conjugate":
        return str(out["conjugate"]).lower()
    if cmd == "garside":
        return out["text"]
    if cmd == "sss-length":
        return str(out["sss_length"])
    if cmd == "farey-word":
        return out["word"]
    if cmd == "collapse":
        lines = [f"{out['word']} -> slope {out['slope']}"]
        for s in out["steps"]:
            iv = s["interval"]
            lines.append(f"{s['side']} [{iv['b']}/{iv['a']}, {iv['d']}/{iv['c']}] "
                         f"({s['measure']['x']}, {s['measure']['y']})")
        return "\n".join(lines)
    if cmd == "render":
        return f"wrote {out['written']}"
    if cmd == "oracle":
        if out["kind"] == "sl2-conjugacy":
            return out["verdict"] + (f" {out['witness']}" if out["witness"] else "")
        if out["kind"] == "cf-iterate":
            return " ".join(map(str, out["terms"]))
        return f"inf={out['inf']} factors={out['factors']} agree={str(out['agree']).lower()}"
    return dumps(out)


# --- argv -----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="agol", description="Agol cycles of pseudo-Anosov 3-braids.")
    p.add_argument("--version", action="version", version=f"agol {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def braid_cmd(name, help_, surface=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("braid", help='braid word, e.g. "s1 s2^-1" or "D^2 s1"')
        if surface:
            sp.add_argument("--surface", choices=SURFACES, default=TORUS)
        sp.add_argument("--json", action="store_true")
        return sp

    braid_cmd("classify", "Nielsen-Thurston type")
    braid_cmd("normal-form", "Murasugi normal form of a pseudo-Anosov braid")
    braid_cmd("agol-cycle", "Agol cycle with exact measures", surface=True)
    braid_cmd("cycle-length", "Agol cycle length", surface=True)
    braid_cmd("garside", "Garside left normal form")
    braid_cmd("sss-length", "canonical length in the super summit set")

    sp = sub.add_parser("conjugate", help="conjugacy of two pseudo-Anosov braids")
    sp.add_argument("braid1")
    sp.add_argument("braid2")
    sp.add_argument("--mod-center", action="store_true", help="conjugacy in B3 modulo its center")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("farey-word", help="L/R word of a Farey interval")
    sp.add_argument("left", help="left endpoint b/a")
    sp.add_argument("right", help="right endpoint d/c (1/0 for infinity)")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("collapse", help="splitting sequence of a rational slope")
    sp.add_argument("fraction")
    sp.add_argument("--surface", choices=SURFACES, default=TORUS)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("render", help="SVG of an Agol cycle (or of a collapse with --fraction)")
    sp.add_argument("braid", nargs="?")
    sp.add_argument("--fraction")
    sp.add_argument("--surface", choices=SURFACES, default=TORUS)
    sp.add_argument("--out", required=True)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("batch", help="JSON lines in, JSON lines out")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("input", nargs="?", help="file of requests (default stdin)")

    sp = sub.add_parser("oracle", help="independent brute-force checks")
    sp.add_argument("kind", choices=("sl2-conjugacy", "cf-iterate", "garside-bruteforce"))
    sp.add_argument("args", nargs="+")
    sp.add_argument("--bound", type=int, help="search bound (default $AGOL_ORACLE_BOUND or 20)")
    sp.add_argument("--terms", type=int, default=10)
    sp.add_argument("--mod-sign", action="store_true", help="also accept conjugacy to -M")
    sp.add_argument("--json", action="store_true")
    return p


def _request(ns) -> dict:
    req = {"cmd": ns.cmd}
    for key in ("braid", "surface", "left", "right", "fraction", "out", "kind", "args", "bound", "terms"):
        if getattr(ns, key, None) is not None:
            req[key] = getattr(ns, key)
    if ns.cmd == "conjugate":
        req["braids"] = [ns.braid1, ns.braid2]
        req["mod_center"] = ns.mod_center
    if ns.cmd == "oracle":
        req["mod_sign"] = ns.mod_sign
    return req


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
        if ns.cmd == "batch":
            if ns.jobs < 1:
                raise UsageError("--jobs must be positive")
            src = open(ns.input) if ns.input else stdin
            try:
                for line in run_batch(src.read().splitlines(), ns.jobs):
                    print(line, file=stdout)
            finally:
                if ns.input:
                    src.close()
            return 0
        out = HANDLERS[ns.cmd](_request(ns))
    except (AgolError, ValueError, ZeroDivisionError) as exc:
        kind, code = _error_kind(exc)
        print(f"agol: {kind} error: {exc}", file=stderr)
        return code
    print(dumps(out) if getattr(ns, "json", False) else _text(ns.cmd, out), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
