import json
import subprocess
import sys

import pytest

from singlab import cli
from singlab.serialize import (family_from_dict, family_to_dict, invariants_from_dict,
                               invariants_to_dict, newton_from_dict, newton_to_dict)

from conftest import ALTMAN, ALTMAN_F, BRIANCON_SPEDER, x13y20_family


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    doc = json.loads(out) if code == 0 and "--format" not in argv else out
    return code, doc, err


def test_invariants_altman(capsys):
    code, doc, _ = run(capsys, "invariants", "--poly", ALTMAN_F, "--vars", "x,y,z", "--verify")
    assert code == 0
    assert doc["schema"] == "singlab/1"
    assert doc["command"] == "invariants"
    res = doc["result"]
    assert res["mu"] == 68 and res["nu"] == 68
    assert res["mu_oracle"] == 68 and res["kouchnirenko"] == "equal"


def test_invariants_morse_and_non_isolated(capsys):
    code, doc, _ = run(capsys, "invariants", "--poly", "x*y", "--vars", "x,y")
    assert code == 0 and doc["result"]["mu"] == 1
    code, _, err = run(capsys, "invariants", "--poly", "x^2*y", "--vars", "x,y")
    assert code == 2 and "isolated" in err


def test_newton_commands(capsys):
    altman_f1 = "x^5 + y^6 + z^5 + y^3*z^2 + 2*x^2*y^2*z + x^4*y"
    code, doc, _ = run(capsys, "newton", "--poly", altman_f1, "--vars", "x,y,z")
    assert code == 0 and doc["result"]["nu"] == 67

    code, doc, _ = run(capsys, "newton", "--poly", "x^2+y^2", "--vars", "x,y")
    assert doc["result"]["volumes"] == ["4", "2"] and doc["result"]["nu"] == 1
    assert doc["result"]["face_counts"] == [2, 1]

    bs = BRIANCON_SPEDER.replace("+ t*x*z^6", "")
    code, _, err = run(capsys, "newton", "--poly", bs, "--vars", "x,y,z")
    assert code == 3 and "--stabilize" in err
    code, doc, _ = run(capsys, "newton", "--poly", bs, "--vars", "x,y,z", "--stabilize")
    assert code == 0 and doc["result"]["nu"] == 364
    assert doc["result"]["convenient"] is False
    assert doc["result"]["stabilization_degree"] is not None


@pytest.mark.parametrize("poly,plane,mu", [
    ("x^13 + y^20 + z*x^6*y^5 + z^7", "z=0", 228),
    ("x^2+y^2+z^2", "z=0", 1),
    ("x^3+y^3+z^3", "z=x", 4),
])
def test_section(capsys, poly, plane, mu):
    code, doc, _ = run(capsys, "section", "--poly", poly, "--vars", "x,y,z", "--hyperplane", plane)
    assert code == 0 and doc["result"]["section_mu"] == mu


def test_section_reference_and_random(capsys):
    code, doc, _ = run(capsys, "section", "--poly", "x^3+y^3+z^3", "--vars", "x,y,z",
                       "--hyperplane", "z=0", "--random", "2", "--reference", "5")
    res = doc["result"]
    assert code == 0
    assert res["reference_mu"] == 5 and res["matches_reference"] is False
    assert res["random_samples"] == 2 and 1 <= res["random_min_mu"] <= 4


@pytest.mark.parametrize("argv", [
    ["invariants", "--poly", "x^2+", "--vars", "x"],
    ["invariants", "--poly", "x^2+w", "--vars", "x"],
    ["invariants", "--vars", "x"],
    ["invariants", "--poly", "1+x^2", "--vars", "x"],
    ["section", "--poly", "x^2+y^2", "--vars", "x,y", "--hyperplane", "y=x^2"],
    ["section", "--poly", "x^2+y^2", "--vars", "x,y", "--hyperplane", "w=0"],
    ["family", "--poly", "1+t*x^2", "--vars", "x", "--param", "t"],
    ["bogus"],
])
def test_usage_errors_exit_1(capsys, argv):
    assert cli.main(argv) == 1
    assert capsys.readouterr().err


def test_section_not_isolated_exit_2(capsys):
    code, _, _ = run(capsys, "section", "--poly", "x^2*y+z^3", "--vars", "x,y,z",
                     "--hyperplane", "z=0")
    assert code == 2


def test_family_verdicts(capsys):
    code, doc, _ = run(capsys, "family", "--poly", ALTMAN, "--vars", "x,y,z", "--param", "t")
    assert code == 0
    assert doc["result"]["verdict"] == "not-applicable-degenerate"
    assert doc["result"]["mu_constant"] == "yes"

    code, doc, _ = run(capsys, "family", "--poly", x13y20_family(7), "--vars", "x,y,z",
                       "--param", "t", "--samples", "2")
    assert doc["result"]["verdict"] == "topologically-trivial-and-equimultiple"
    assert doc["result"]["base"]["invariants"]["mu"] == 1103

    code, doc, _ = run(capsys, "family", "--poly", "x^3+y^2+t*x^2", "--vars", "x,y",
                       "--param", "t")
    assert doc["result"]["verdict"] == "mu-not-constant"


def test_json_round_trips(capsys):
    _, doc, _ = run(capsys, "invariants", "--poly", ALTMAN_F, "--vars", "x,y,z", "--verify")
    res = doc["result"]
    assert invariants_to_dict(invariants_from_dict(res)) == res

    _, doc, _ = run(capsys, "family", "--poly", ALTMAN, "--vars", "x,y,z", "--param", "t",
                    "--samples", "1")
    res = doc["result"]
    assert family_to_dict(family_from_dict(res)) == res

    _, doc, _ = run(capsys, "newton", "--poly", "x^5+y^3+x*y^2", "--vars", "x,y")
    res = doc["result"]
    assert newton_to_dict(newton_from_dict(res)) == res


def _text_integers(text):
    out = {}
    for line in text.splitlines():
        key, _, value = line.partition(" = ")
        v = json.loads(value)
        if isinstance(v, int) and not isinstance(v, bool):
            out[key] = v
    return out


def _json_integers(doc, prefix=""):
    rows = []
    cli._flatten(prefix, doc, rows)
    return {k: v for k, v in rows if isinstance(v, int) and not isinstance(v, bool)}


@pytest.mark.parametrize("argv", [
    ["invariants", "--poly", ALTMAN_F, "--vars", "x,y,z"],
    ["newton", "--poly", "x^4+y^5+x^2*y^2", "--vars", "x,y"],
    ["section", "--poly", "x^3+y^3+z^3", "--vars", "x,y,z", "--hyperplane", "z=x"],
])
def test_text_and_json_agree(capsys, argv):
    assert cli.main(argv) == 0
    as_json = json.loads(capsys.readouterr().out)
    assert cli.main(argv + ["--format", "text"]) == 0
    as_text = _text_integers(capsys.readouterr().out)
    as_json.pop("timing")
    ints = _json_integers(as_json)
    assert ints and all(as_text[k] == v for k, v in ints.items())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "singlab", "newton", "--poly", "x^2+y^3",
                           "--vars", "x,y"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["nu"] == 2
