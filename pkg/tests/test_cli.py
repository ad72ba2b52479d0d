import io
import json
import subprocess
import sys

import pytest

from spechtkit.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_tableaux_json():
    code, data, _ = call_json("tableaux", "--alpha", "4,3,3,2,1", "-a", "1", "-b", "6")
    assert code == 0
    assert data["count"] == data["formula"] == 12
    assert data["beta"] == [3, 3, 3, 2, 1, 1]
    assert [1] in data["sets"] and [1, 2, 3, 4, 5] in data["sets"]


def test_cp_map_worked_example():
    code, data, _ = call_json("cp-map", "--alpha", "4,3", "--beta", "3,3,1", "-p", "5", "--image-of", "row-reading")
    assert code == 0 and data["status"] == "ok"
    assert data["hooks"] == [5, 3]
    assert {tuple(c["set"]): c["coefficient"] for c in data["coefficients"]} == {(1,): -3, (1, 2): 1}
    assert data["image_standard"]


def test_cp_map_text_and_residue_error():
    code, out, _ = call("cp-map", "--alpha", "4,3", "-a", "1", "-b", "3")
    assert code == 0 and "Lambda_{1} = -3" in out
    code, out, err = call("cp-map", "--alpha", "4,3", "-a", "1", "-b", "3", "-p", "3")
    assert code == 2 and "residue condition" in err and out == ""


def test_jm_map():
    code, data, _ = call_json("jm-map", "--lambda", "4,3,1", "-u", "3", "-v", "1", "-p", "5", "--image-of", "row-reading")
    assert code == 0
    assert data["factor_contents"] == [1, -2]
    assert data["layer_contents"] == [3, 1, -2]
    assert data["scalar"] == 1 and data["integral_ok"] and data["lower_ok"]
    code, out, _ = call("jm-map", "--alpha", "4,3", "--beta", "3,3,1", "-p", "5", "--image-of", "row-reading")
    assert code == 0 and "(L_8-1)(L_8+2)" in out and "•" in out


def test_hom_and_p2_policy():
    code, data, _ = call_json("hom", "--alpha", "4,3", "--beta", "3,3,1", "-p", "5")
    assert code == 0 and data["dimension"] == 1 and len(data["basis"]) == 1
    code, _, err = call("hom", "--alpha", "2", "--beta", "1,1", "-p", "2")
    assert code == 2 and "--allow-p2" in err
    code, data, _ = call_json("hom", "--alpha", "2", "--beta", "1,1", "-p", "2", "--allow-p2")
    assert code == 0 and data["dimension"] == 1
    code, _, err = call("endo", "--lambda", "2,1", "-p", "2")
    assert code == 2 and "characteristic" in err


def test_endo():
    code, data, _ = call_json("endo", "--lambda", "4,3,1", "-p", "5")
    assert code == 0
    assert data["end_dimension"] == 3 and data["generated_by_eps"]
    assert [(b["residue"], b["multiplicity"]) for b in data["blocks"]] == [(1, 1), (3, 2)]
    code, data, _ = call_json("endo", "--lambda", "3,1", "-p", "3", "--induce")
    assert code == 0 and data["mode"] == "induce"


def test_jantzen():
    code, data, _ = call_json("jantzen", "--beta", "3,3,1", "-p", "5", "--contain", "4,3")
    assert code == 0
    assert data["dimensions"] == [21, 13]
    assert data["containment"]["i_observed"] == 1 and data["containment"]["h_a"] == 5


def test_verify_small():
    code, data, _ = call_json("verify", "--max-n", "4", "--suite", "relations", "--suite", "jantzen")
    assert code == 0 and data["failures"] == []
    assert data["suites"]["relations"]["checked"] > 0
    code, _, err = call("verify", "--suite", "nonsense")
    assert code == 2 and "unknown suite" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("tableaux", "--alpha", "x", "-a", "1", "-b", "2"),
        ("tableaux", "--alpha", "3,1"),
        ("tableaux", "--alpha", "3,3", "-a", "1", "-b", "2"),
        ("hom", "--alpha", "3", "--beta", "2,1", "-p", "4"),
        ("jm-map", "--lambda", "4,3,1", "-p", "5"),
        ("cp-map", "--alpha", "4,3", "--beta", "4,3"),
        ("jantzen", "--beta", "13", "-p", "5"),
        ("nonsense",),
    ],
)
def test_invalid_requests_exit_2(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_degree_guard_and_force():
    code, _, err = call("hom", "--alpha", "7,6", "--beta", "6,6,1", "-p", "7")
    assert code == 2 and "force" in err
    code, _, _ = call("cp-map", "--alpha", "7,6", "-a", "1", "-b", "3", "--force")
    assert code == 0


def test_output_is_deterministic():
    argv = ("cp-map", "--alpha", "4,3", "--beta", "3,3,1", "-p", "5", "--image-of", "row-reading", "--format", "json")
    assert call(*argv)[1] == call(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spechtkit", "tableaux", "--alpha", "4,3", "-a", "1", "-b", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "{1,2}" in proc.stdout
