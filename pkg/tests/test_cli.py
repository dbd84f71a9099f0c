import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from brauer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_weight_text(capsys):
    code, out, _ = run(capsys, "weight", "-d", "2", "-p", "-")
    assert code == 0 and out.strip() == "o v v v …"


def test_negative_delta_forms(capsys):
    a = run(capsys, "embed", "-p", "2,1", "--delta=-3")
    b = run(capsys, "embed", "-p", "2,1", "-d", "-3")
    assert a == b and a[0] == 0
    assert a[1].startswith("(7/2, 3/2, -1/2")


def test_dims_table(capsys):
    code, out, _ = run(capsys, "dims", "-d", "1", "-n", "3", "--format", "json")
    rows = {r["partition"]: r for r in json.loads(out)}
    assert code == 0 and rows["1"]["dim_standard"] == 3 and rows["1"]["dim_simple"] == 1


def test_dims_csv_and_zero_delta(capsys):
    code, out, _ = run(capsys, "dims", "-d", "0", "-n", "2", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "partition,dim_standard,dim_simple,restricted,restricted_walks"
    assert code == 0 and len(lines) == 4


def test_usage_errors(capsys):
    code, _, err = run(capsys, "nonsense")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, err = run(capsys, "weight", "-p", "1,2", "-d", "1")
    assert code == 2
    code, _, err = run(capsys, "verify", "-n", "2", "-d", "1", "--tol", "0")
    assert code == 2


def test_precondition_errors(capsys):
    code, _, err = run(capsys, "restrict", "-p", "1", "-n", "3", "-d", "0")
    assert code == 2 and json.loads(err)["error"] == "precondition"
    code, _, err = run(capsys, "matrices", "-p", "2", "-n", "4", "-d", "1", "--simple")
    assert code == 2 and "restricted" in json.loads(err)["message"]
    code, _, err = run(capsys, "matrices", "-p", "1", "-n", "3", "--at", "0")
    assert code == 2 and json.loads(err)["error"] == "evaluation"


def test_restrict_json(capsys):
    code, out, _ = run(capsys, "restrict", "-p", "2,1", "-n", "5", "-d", "2")
    data = json.loads(out)
    assert code == 0 and all({"block", "head", "middle", "socle"} <= set(d) for d in data)


def test_blocks_and_decomp(capsys):
    code, out, _ = run(capsys, "blocks", "-n", "4", "-d", "1", "--format", "json")
    blocks = json.loads(out)
    assert sorted(p for b in blocks for p in b) == sorted(["4", "3,1", "2,2", "2,1,1", "1,1,1,1", "2", "1,1", "-"])
    code, out, _ = run(capsys, "decomp", "-n", "4", "-d", "1", "-p", "2,1,1", "--format", "json")
    (item,) = json.loads(out)
    assert "2,1,1" in item["block"]
    assert all(item["matrix"][i][i] == 1 for i in range(len(item["block"])))


def test_matrices(capsys):
    code, out, _ = run(capsys, "matrices", "-p", "-", "-n", "2", "--at", "7")
    assert code == 0 and json.loads(out)["e"] == [[["7.0"]]]
    code, out, _ = run(capsys, "matrices", "-p", "1", "-n", "3", "-d", "1", "--simple")
    assert code == 0 and len(json.loads(out)["basis"]) == 1
    code, out2, _ = run(capsys, "matrices", "-p", "1", "-n", "3", "-d", "1", "--simple")
    assert out == out2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "-d", "2", "-n", "4")
    assert code == 0 and out.strip().endswith("checks passed")
    code, out, _ = run(capsys, "verify", "-d", "-3", "-n", "3", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize("cmd", [["cap", "-p", "3,1", "-d", "-2", "--format", "svg"],
                                 ["weight", "-p", "3,1", "-d", "3", "--format", "svg"],
                                 ["render", "-p", "4,2,2,1", "-d", "1"]])
def test_svg_output(capsys, cmd):
    code, out, _ = run(capsys, *cmd)
    root = ET.fromstring(out.encode())
    assert code == 0 and root.tag.endswith("svg") and root.get("version") == "1.1"


def test_render_to_file(tmp_path, capsys):
    target = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "render", "-p", "2,1", "-d", "2", "-o", str(target))
    assert code == 0 and json.loads(out)["written"] == str(target)
    ET.parse(target)


def test_cap_text_and_json(capsys):
    code, out, _ = run(capsys, "cap", "-p", "3,1", "-d", "-2")
    assert out.splitlines()[0].startswith("| v  ^")
    code, out, _ = run(capsys, "cap", "-p", "3,1", "-d", "-2", "--format", "json")
    assert json.loads(out)["caps"] == [[0, 1]]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "brauer", "weight", "-d", "2", "-p", "-"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "o v v v …"
