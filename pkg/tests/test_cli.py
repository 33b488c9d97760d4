import io
import json
import subprocess
import sys

import pytest

from coendcalc.cli import run

D = "tests/data/"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--format", "json")
    return code, json.loads(text)


def test_nat_as_end_on_the_bundled_pair():
    code, rep = call_json("check", "nat-as-end")
    assert code == 0
    suite = rep["suites"][0]
    assert suite["cardinalities"]["bundled Nat(const0, id) on 2"]["end"] == 1


def test_end_on_delta1_notes_the_pullback():
    code, rep = call_json("end", "bifunctors/delta1.json")
    assert code == 0
    assert rep["size"] == 1 and rep["agrees"]
    assert "pullback" in rep["cross_check"]


def test_malformed_composition_exits_2():
    code, rep = call_json("validate", D + "bad_assoc.json")
    assert code == 2
    assert rep["error"] == "AssociativityViolation"
    assert "('a', 'a', 'a')" in rep["message"]


def test_missing_file_exits_2():
    code, rep = call_json("coend", D + "nope.json")
    assert code == 2 and rep["error"] == "FormatError"


def test_unknown_verb_exits_2(capsys):
    assert call("frobnicate")[0] == 2


@pytest.mark.parametrize("argv,field,value", [
    (["coend", "bifunctors/delta1.json"], "size", 3),
    (["day", "Z2", D + "f_z2.json", D + "g_z2.json"], "sizes", {"0": 5, "1": 5}),
    (["wlim", "setfunctors/kernel_pair_weight.json",
      "setfunctors/kernel_pair_diagram.json"], "size", 5),
    (["lan", "functors/const0_on_2.json", D + "t2.json"], "sizes", {"0": 1, "1": 1}),
    (["ran", "functors/id_2.json", D + "t2.json"], "sizes", {"0": 1, "1": 1}),
    (["compose-pro", D + "hom2.json", D + "hom2.json"], "cardinalities", [[1, 1], [0, 1]]),
    (["collage", D + "hom2.json"], "objects", 4),
    (["isbell", D + "y0.json", D + "t2.json"], "Spec", {"0": 1, "1": 0}),
    (["nerve", "2", D + "y0.json", D + "y1.json"], "realization", {"0": 1, "1": 0}),
    (["fourier", "Z4", D + "f_z4.json", "--functor", D + "mod2.json", "--target", "Z2",
      "--with", D + "g_z4.json"], "sizes", {"0": 3, "1": 1}),
    (["fourier", "Z2", D + "f_z2.json"], "sizes", {"0": 2, "1": 3}),
    (["validate", D + "trivial_promonoidal.json"], "kind", "promonoidal"),
    (["validate", "monoidal/Idem.json"], "kind", "monoidal"),
])
def test_verbs(argv, field, value):
    code, rep = call_json(*argv)
    assert code == 0, rep
    assert rep[field] == value


def test_options_after_or_before_the_verb():
    a = call("--format", "json", "--seed", "3", "check", "center")
    b = call("check", "center", "--seed", "3", "--format", "json")
    assert a == b and json.loads(a[1])["seed"] == 3


def test_timings_are_opt_in():
    _, rep = call_json("check", "pullback")
    assert "wall_time" not in rep
    _, rep = call_json("check", "pullback", "--timings")
    assert "wall_time" in rep and "wall_time" in rep["suites"][0]


def test_cap_is_applied():
    code, rep = call_json("end", "bifunctors/delta1.json", "--cap", "1")
    assert code == 2 and rep["error"] == "SizeCapExceeded"


def test_reports_are_byte_identical_across_processes():
    argv = [sys.executable, "-m", "coendcalc.cli", "check", "ninja", "--seed", "7"]
    runs = [subprocess.run(argv, capture_output=True, check=False) for _ in range(2)]
    assert runs[0].returncode == 0
    assert runs[0].stdout == runs[1].stdout
