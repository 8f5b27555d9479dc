import io
import json
from xml.dom import minidom

import pytest

from agol.cli import handle, run, run_batch


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_classify_text():
    code, out, _ = call("classify", "s1 s2^-1")
    assert code == 0
    assert out.strip() == "pseudo-anosov j=0 pairs=(1,1)"
    assert call("classify", "s1")[1].strip() == "reducible"


def test_agol_cycle_json_schema():
    code, out, _ = call("agol-cycle", "s1 s2^-1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == ["surface", "normal_form", "matrix", "trace", "D", "lambda", "slope", "length",
                         "steps", "verified"]
    assert obj["length"] == 2
    assert obj["verified"] is True
    assert obj["lambda"] == {"p": "3", "q": "1", "r": "2", "D": "5", "approx": "2.61803398875"}
    assert [s["side"] for s in obj["steps"]] == ["L", "R"]


def test_cycle_length_and_sss():
    assert call("cycle-length", "s1^3 s2^-2", "--surface", "sphere4")[1].strip() == "5"
    assert call("sss-length", "s2 s1^3 s2^-2 s2^-1")[1].strip() == "5"


def test_farey_word_and_collapse():
    assert call("farey-word", "10/7", "3/2")[1].strip() == "LRRLLL"
    obj = json.loads(call("farey-word", "10/7", "3/2", "--json")[1])
    assert obj["matrix"] == [[7, 2], [10, 3]]
    assert len(obj["chain"]) == 7
    obj = json.loads(call("collapse", "10/7", "--json")[1])
    assert obj["word"] == "LRRLLL"
    assert obj["terminal_measure"] == ["1", "0"]


def test_conjugate_and_garside():
    assert call("conjugate", "s1^5 s2^-1", "s1 s2^-5", "--mod-center") == (0, "false\n", "")
    assert call("conjugate", "s1 s2^-2", "s2^-2 s1")[1] == "true\n"
    assert call("garside", "s1 s2^-2")[1].strip() == "D^-2 . s1 . s1s2 . s2s1"


def test_oracles():
    assert call("oracle", "cf-iterate", "1,1,2,5")[1].split() == ["1"] * 10
    obj = json.loads(call("oracle", "sl2-conjugacy", "L L R", "R L L", "--bound", "4", "--json")[1])
    assert obj["verdict"] == "witness-found"
    obj = json.loads(call("oracle", "garside-bruteforce", "s1 s2^-1", "--json")[1])
    assert obj["agree"] is True


@pytest.mark.parametrize("argv, code", [
    (["classify", "s1 s2^-1"], 0),
    (["agol-cycle", "s1"], 1),
    (["conjugate", "s1 s2^-1", "s1 s2"], 1),
    (["collapse", "2/4"], 1),
    (["classify", "s3"], 2),
    (["farey-word", "a/b", "1/0"], 2),
    (["nonsense"], 2),
    (["batch", "--jobs", "0"], 2),
])
def test_exit_codes(argv, code):
    got, _, err = call(*argv)
    assert got == code
    assert (err != "") == (code != 0)


def test_render_cycle_and_collapse(tmp_path):
    target = tmp_path / "golden.svg"
    assert call("render", "s1 s2^-1", "--out", str(target))[0] == 0
    doc = minidom.parse(str(target))
    assert doc.documentElement.tagName == "svg"
    assert len(doc.getElementsByTagName("rect")) == 3
    target = tmp_path / "curve.svg"
    assert call("render", "--fraction", "10/7", "--surface", "sphere4", "--out", str(target))[0] == 0
    doc = minidom.parse(str(target))
    # four punctures per panel on the pillowcase
    assert len(doc.getElementsByTagName("circle")) == 4 * 7


REQUESTS = [
    {"cmd": "cycle-length", "braid": "s1 s2^-1"},
    {"cmd": "classify", "braid": "s1"},
    {"cmd": "classify", "braid": "s1 x"},
    {"cmd": "agol-cycle", "braid": "s1^3 s2^-2 s1 s2^-4", "surface": "sphere4"},
    {"cmd": "conjugate", "braids": ["s1 s2^-1", "D^2 s1 s2^-1"], "mod_center": True},
    {"cmd": "garside", "braid": "s1^2 s2^-3"},
    {"cmd": "oracle", "kind": "cf-iterate", "args": ["0,1,1,7"]},
    {"cmd": "bogus"},
]


def test_batch_matches_subcommands():
    lines = [json.dumps(r) for r in REQUESTS] + ["{not json"]
    out = [json.loads(x) for x in run_batch(lines)]
    assert out[0] == {"length": 2}
    assert out[1] == {"type": "reducible"}
    assert out[2]["error"] == "parse"
    assert out[4] == {"conjugate": True, "mod_center": True}
    assert out[7]["error"] == "usage"
    assert out[8]["error"] == "parse"
    assert json.loads(call("agol-cycle", "s1^3 s2^-2 s1 s2^-4", "--surface", "sphere4", "--json")[1]) == out[3]


def test_batch_concurrency_is_deterministic():
    lines = [json.dumps(r) for r in REQUESTS * 10]
    serial = run_batch(lines, jobs=1)
    assert run_batch(lines, jobs=8) == serial
    code, out, _ = call("batch", "--jobs", "4", stdin="\n".join(lines))
    assert code == 0
    assert out.splitlines() == serial


def test_handle_rejects_non_objects():
    assert handle([1, 2])["error"] == "usage"
