import json
import subprocess
import sys

import pytest

from hsbranch.branching import BranchingResult
from hsbranch.cli import main
from hsbranch.kstriple import KSData


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_branch_all_paths(capsys):
    code, out, _ = run(capsys, "branch", "CI:n=2", "2,1", "--cap", "11", "--path", "all")
    assert code == 0
    assert out.count("5:1, 7:2, 9:3, 11:4") == 3 and "PASS" in out


def test_branch_sp1(capsys):
    code, out, _ = run(capsys, "branch", "CI:n=1", "3")
    assert code == 0 and "3:1" in out


def test_branch_su22_json(capsys):
    code, out, _ = run(capsys, "--json", "branch", "AIII:p=2,q=2", "3/2,1/2,-1/2,-3/2", "--cap", "11", "--path", "oracle")
    data = json.loads(out)
    assert code == 0 and data["path"] == "oracle"
    assert [(e["m"], e["mult"]) for e in data["entries"]] == [(7, 1), (9, 3), (11, 6)]
    assert BranchingResult.from_json(data).to_json() == data


def test_branch_fw_flag(capsys):
    code, out, _ = run(capsys, "branch", "CI:n=2", "1,1", "--fw", "--cap", "9")
    assert code == 0 and "5:1, 7:2, 9:3" in out


@pytest.mark.parametrize("lam,word", [("1,2", "dominance"), ("1,-1", "holomorphy"), ("1/2,1/3", "integrality")])
def test_branch_invalid_lambda(capsys, lam, word):
    code, _, err = run(capsys, "branch", "CI:n=2", lam)
    assert code == 2 and word in err and "ε" in err


def test_bad_pair_exit_two(capsys):
    code, _, err = run(capsys, "describe", "CI:n=0")
    assert code == 2 and "pair grammar" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["branch"])
    assert info.value.code == 2


def test_describe_ci(capsys):
    code, out, _ = run(capsys, "describe", "CI:n=3")
    assert code == 0
    assert "2ε1, 2ε2, 2ε3" in out and "c = 0, d+1 = 6; tube" in out


def test_describe_eiii(capsys):
    code, out, _ = run(capsys, "describe", "EIII")
    assert "c = 8, d+1 = 8; non-tube" in out and "D4" in out


def test_describe_aiii_json(capsys):
    code, out, _ = run(capsys, "describe", "AIII:p=3,q=3", "--json")
    data = json.loads(out)
    assert data["tube"] and data["Z0"] == ["1", "1", "1", "-1", "-1", "-1"]
    assert KSData.from_json(data).to_json() == data


def test_describe_list(capsys):
    code, out, _ = run(capsys, "describe", "list", "--json")
    assert [r["family"] for r in json.loads(out)] == ["AIII", "BDI", "CI", "DIII", "EIII", "EVII"]


def test_verify_pair(capsys):
    code, out, _ = run(capsys, "verify", "BDI:odd,p=2")
    assert code == 0 and out.startswith("PASS")


def test_verify_evii_json(capsys):
    code, out, _ = run(capsys, "--json", "verify", "EVII")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    ids = {c["id"] for c in data["checks"]}
    assert "kstriple.evii_gamma1[EVII]" in ids


def test_verify_usage(capsys):
    code, _, _ = run(capsys, "verify")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hsbranch", "branch", "CI:n=1", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "2:1" in proc.stdout
