import json

import pytest

from gbent.cli import main
from gbent.gbfunc import is_gbent, parse_table


def run(capsys, *args):
    code = main([str(a) for a in args])
    return code, capsys.readouterr()


def test_construct_verify_roundtrip(tmp_path, capsys):
    out = tmp_path / "d.txt"
    code, _ = run(capsys, "construct", "dillon", "--desarguesian", 2, "--k", "0,1,2,3,0", "-o", out)
    assert code == 0
    assert is_gbent(parse_table(out.read_text()))
    code, cap = run(capsys, "verify", out)
    assert code == 0 and "gbent: true, regular: true" in cap.out
    code, cap = run(capsys, "verify", out, "--json")
    report = json.loads(cap.out)
    assert report["gbent"] is True and report["regular"] is True and report["n"] == 4


def test_trace_form_roundtrip(tmp_path, capsys):
    out = tmp_path / "tp.txt"
    assert run(capsys, "construct", "trace-pair", "--m", 3, "--a", "3", "--b", "5", "-o", out)[0] == 0
    assert out.read_text().startswith("n=6 t=2 form=trace modulus=")
    code, cap = run(capsys, "dual", out, "-o", tmp_path / "dual.txt")
    assert code == 0
    assert run(capsys, "verify", tmp_path / "dual.txt")[0] == 0


def test_false_verdict_exit_one(tmp_path, capsys):
    path = tmp_path / "zero.txt"
    path.write_text("n=2 t=1 form=dot\n0\n0\n0\n0\n")
    code, cap = run(capsys, "verify", path)
    assert code == 1 and "gbent: false" in cap.out
    code, cap = run(capsys, "verify", path, "--json")
    assert code == 1 and json.loads(cap.out)["gbent"] is False


@pytest.mark.parametrize(
    "args",
    [
        ["construct", "trace-pair", "--m", "2", "--a", "1", "--b", "1"],
        ["construct", "dillon", "--desarguesian", "2", "--k", "0,0,0,0,0"],
        ["vectorial", "--n", "4", "--t", "1", "--m", "3"],
        ["verify", "/nonexistent/table.txt"],
        ["classify", "0,3,0,2,0", "--m", "2", "--q", "4"],
    ],
)
def test_errors_exit_two(capsys, args):
    code, cap = run(capsys, *args)
    assert code == 2
    assert cap.err.startswith("error:")


def test_classify(capsys):
    code, cap = run(capsys, "classify", "rho=0,A=2,c=0,2,0", "--m", 2, "--q", 4)
    assert code == 0 and cap.out.strip() == "condition I"
    code, cap = run(capsys, "classify", "3,2,0,1,1", "--m", 2, "--q", 4, "--json")
    report = json.loads(cap.out)
    assert code == 1 and report["condition"] is None and report["sum_condition"] is False


def test_enumerate_profiles(capsys):
    code, cap = run(capsys, "enumerate-profiles", 4, 2, 2, 2)
    assert code == 0
    assert cap.out.split() == ["0,2,0,2,0", "I"]


def test_vectorial_and_rds(tmp_path, capsys):
    out = tmp_path / "v.txt"
    code, cap = run(capsys, "vectorial", "--n", 8, "--t", 2, "--seed", 4, "-o", out)
    assert code == 0 and "vectorial gbent: true" in cap.err
    code, cap = run(capsys, "rds-check", out, "--json")
    report = json.loads(cap.out)
    assert code == 0 and report["characters"] and report["counting"]
    assert report["params"] == {"mu": 256, "nu": 16, "k": 256, "lambda": 16}


def test_rds_check_failure(tmp_path, capsys):
    path = tmp_path / "deg.txt"
    g = [(x & 1) & (x >> 1 & 1) ^ (x >> 2 & 1) & (x >> 3 & 1) for x in range(16)]
    path.write_text("n=4 t=2 m=1 form=dot\n" + "".join(f"{2 * v}\n" for v in g))
    code, cap = run(capsys, "rds-check", path, "--json")
    report = json.loads(cap.out)
    assert code == 1 and not report["characters"] and not report["counting"]
    assert {"u": 0, "c": [2], "squared": 256, "expected": 16} in report["failing_characters"]


def test_spectrum_and_distribution(tmp_path, capsys):
    out = tmp_path / "p.txt"
    run(capsys, "construct", "partial-spread", "--desarguesian", 2, "--t", 2, "--k", "1,2,2", "--rho", 1, "-o", out)
    code, cap = run(capsys, "distribution", out, "--json")
    assert code == 0 and sum(json.loads(cap.out)["counts"]) == 16
    code, cap = run(capsys, "spectrum", out, "--json")
    assert code == 0
