import json
import math

import pytest

from schreier_lab.cli import main, parse_set_literal, parse_vector_literal


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out


def test_parse_vector_literal():
    v = parse_vector_literal("1:1, 2:0.5 ,3:-2")
    assert v.entries == {1: 1.0, 2: 0.5, 3: -2.0}
    assert parse_vector_literal("").is_zero()
    with pytest.raises(ValueError):
        parse_vector_literal("1:1,1:2")
    with pytest.raises(ValueError):
        parse_vector_literal("0:1")
    with pytest.raises(ValueError):
        parse_vector_literal("a:b")


def test_parse_set_literal():
    assert parse_set_literal("1, 2, 3") == (1, 2, 3)
    assert parse_set_literal("") == ()
    with pytest.raises(ValueError):
        parse_set_literal("3,2")
    with pytest.raises(ValueError):
        parse_set_literal("1,1")


def test_norm_command(capsys):
    rc, out = run(capsys, "norm", "--space", "Sp", "--p", "1", "--vec", "1:1,2:1,3:1")
    assert rc == 0
    assert "2.0" in out and "[2, 3]" in out

    rc, out = run(
        capsys, "norm", "--space", "Bp", "--p", "2", "--vec", "1:1,2:1,3:1", "--format", "json"
    )
    assert rc == 0
    report = json.loads(out)
    assert abs(report["value"] - math.sqrt(5)) < 1e-12
    assert report["witness"] == [[1], [2, 3]]
    assert report["command"] == "norm"
    assert set(report) == {"command", "inputs", "value", "witness", "seed", "tool_version"}


def test_norm_invalid_space_exits_2(capsys):
    rc, _ = run(capsys, "norm", "--space", "Bp", "--p", "1", "--vec", "1:1")
    assert rc == 2
    rc, _ = run(capsys, "norm", "--space", "Sp", "--p", "1", "--vec", "1:1,1:2")
    assert rc == 2


def test_tau_command(capsys):
    rc, out = run(capsys, "tau", "--set", "1,2,3", "--format", "json")
    assert rc == 0
    report = json.loads(out)
    assert report["value"] == 2
    assert report["witness"] == [[1], [2, 3]]

    rc, out = run(capsys, "tau", "--set", "")
    assert rc == 0
    assert "tau1: 0" in out

    rc, out = run(capsys, "tau", "--set", "7")
    assert rc == 0
    assert "tau1: 1" in out

    rc, _ = run(capsys, "tau", "--set", "2,2")
    assert rc == 2


def test_glindex_command(capsys):
    rc, out = run(capsys, "glindex", "--m", ",".join(map(str, range(1, 9))), "--n",
                  ",".join(map(str, range(1, 9))), "--window", "8")
    assert rc == 0
    assert "windowed GL_1: 1" in out
    assert "lower bound" in out

    m = ",".join(str(i) for i in range(1, 21))
    n = ",".join(str(2 * i) for i in range(1, 21))
    rc, out = run(capsys, "glindex", "--m", m, "--n", n, "--window", "20", "--format", "json")
    assert rc == 0
    assert json.loads(out)["value"] == 2

    rc, _ = run(capsys, "glindex", "--m", m, "--n", n, "--window", "0")
    assert rc == 2
    rc, _ = run(capsys, "glindex", "--m", "1,2", "--n", "1,2", "--window", "12")
    assert rc == 2


def test_uncomp_table_command(capsys):
    rc, out = run(capsys, "uncomp-table", "--space", "Sp", "--p", "2", "--kmax", "3",
                  "--format", "csv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,companion,spike,lower_bound"
    last = lines[-1].split(",")
    assert last[0] == "3" and abs(float(last[3]) - 2 / 3) < 1e-12

    rc, out = run(capsys, "uncomp-table", "--space", "Bp", "--p", "2", "--kmax", "4",
                  "--format", "json")
    assert rc == 0
    rows = json.loads(out)["value"]
    assert abs(rows[-1]["lower_bound"] - 2 ** 1.5 / 4) < 1e-9

    rc, out = run(capsys, "uncomp-table", "--space", "Sp", "--p", "2", "--kmax", "1")
    assert rc == 0
    assert " 1 " in out or "1 1" in out

    rc, _ = run(capsys, "uncomp-table", "--space", "Sp", "--p", "2", "--kmax", "9")
    assert rc == 2


def test_json_output_reproducible(capsys):
    args = ["norm", "--space", "Bp", "--p", "2", "--vec", "2:0.5,9:-1.25", "--format", "json"]
    rc1, out1 = run(capsys, *args)
    rc2, out2 = run(capsys, *args)
    assert rc1 == rc2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert json.loads(json.dumps(report)) == report


def test_selftest_quick(capsys):
    rc, out = run(capsys, "selftest", "--level", "quick")
    assert rc == 0
    assert "[PASS] tau1-oracle-equivalence" in out
    assert "selftest: OK" in out


def test_selftest_mutation_is_caught(capsys):
    rc, out = run(capsys, "selftest", "--level", "quick", "--mutate", "sp-norm")
    assert rc == 1
    assert "certificate" in out
    assert "S_p mismatch" in out


def test_usage_error_exit_code(capsys):
    assert main(["norm", "--space", "Qp", "--p", "2", "--vec", "1:1"]) == 2
    assert main([]) == 2
