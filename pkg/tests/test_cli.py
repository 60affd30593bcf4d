import json
import subprocess
import sys

import pytest

from groupdet.cli import main, parse_support

F19 = "2,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"
E0 = "1" + ",0" * 17


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_det_identity(capsys):
    code, out, _ = run(capsys, "det", "--group", "g18-4", E0)
    assert code == 0
    assert "determinant: 1\n" in out
    assert "agree: true" in out


def test_det_family_value(capsys):
    code, out, _ = run(capsys, "det", "--group", "g18-4", "--emit", "json", F19)
    record = json.loads(out)
    assert record["determinant"] == 19
    assert record["paths"] == {"oracle": 19, "reduction": 19, "profile": 19}
    assert record["profile"]["A"] == 19


def test_det_d18_has_two_paths(capsys):
    coeffs = "-1," + "0," * 16 + "2"
    code, out, _ = run(capsys, "det", "--group", "d18", "--emit", "json", f"--coeffs={coeffs}")
    record = json.loads(out)
    assert code == 0
    assert set(record["paths"]) == {"oracle", "reduction"}
    assert "profile" not in record


def test_det_parse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["det", "--group", "g18-4", "1,2,3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["det", "--group", "g18-4"])
    assert exc.value.code == 2


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "--group", "z3xd6", "--emit", "json", "1,0,0,1,0,0,0,0,0,1,0,0,0,0,0,0,0,0")
    record = json.loads(out)
    assert record["product"] == 729
    assert list(record["profile"]) == ["A1", "A2", "A3", "A4"]
    code, _, err = run(capsys, "factor", "--group", "d18", E0)
    assert code == 1 and "UnsupportedGroup" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--group", "z3xd6", "729")
    assert code == 0
    assert "class: ThreeNotTwo" in out and "m: 0" in out
    code, out, _ = run(capsys, "classify", "--group", "g18-4", "--emit", "json", "12")
    record = json.loads(out)
    assert record["member"] is False and record["class"] == "NotMember"


def test_classify_text_and_json_carry_same_data(capsys):
    _, text, _ = run(capsys, "classify", "--group", "g18-4", "17")
    _, js, _ = run(capsys, "classify", "--group", "g18-4", "--emit", "json", "17")
    record = json.loads(js)
    flat = {}
    for k, v in record.items():
        if isinstance(v, dict):
            flat.update({f"{k}.{kk}": vv for kk, vv in v.items()})
        else:
            flat[k] = v
    lines = dict(line.split(": ", 1) for line in text.strip().splitlines())
    assert set(lines) == set(flat)
    for k, v in flat.items():
        assert lines[k] == (v if isinstance(v, str) else json.dumps(v))


def test_achieve(capsys):
    code, out, _ = run(capsys, "achieve", "--group", "g18-4", "--emit", "json", "-19683")
    record = json.loads(out)
    assert code == 0
    assert record["determinant"] == -19683 and record["verified"] is True
    assert record["family"] == "3not2-"
    code, _, err = run(capsys, "achieve", "--group", "g18-4", "7")
    assert code == 1 and "NotInSpectrum" in err
    code, _, err = run(capsys, "achieve", "--group", "d18", "1")
    assert code == 1


def test_search_command(capsys):
    code, out, _ = run(capsys, "search", "--group", "g18-4", "--mode", "exhaustive",
                       "--range", "0..1", "--support", "f", "--lemmas", "--emit", "json")
    assert code == 0
    record = json.loads(out)
    assert record["total"] == 512 and record["violation_count"] == 0
    code, _, err = run(capsys, "search", "--group", "g18-4", "--mode", "exhaustive", "--budget", "10")
    assert code == 1 and "BudgetExceeded" in err


def test_search_text(capsys):
    code, out, _ = run(capsys, "search", "--group", "z3xd6", "--range=-2..2", "--samples", "100", "--oracle")
    assert code == 0
    assert "total: 100" in out and "violations: 0" in out


def test_json_output_round_trips(capsys):
    for argv in (["det", "--emit", "json", F19],
                 ["classify", "--emit", "json", "--group", "z3xd6", "-2916"],
                 ["search", "--emit", "json", "--samples", "50"]):
        _, out, _ = run(capsys, *argv)
        text = out.rstrip("\n")
        assert json.dumps(json.loads(text), indent=2) == text


def test_output_is_stable(capsys):
    outs = [run(capsys, "search", "--samples", "300", "--seed", "9")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_parse_support():
    assert parse_support("f", 18) == tuple(range(9))
    assert parse_support("g", 18) == tuple(range(9, 18))
    assert parse_support("0-2,9", 18) == (0, 1, 2, 9)
    assert parse_support("1" * 3 + "0" * 15, 18) == (0, 1, 2)
    assert parse_support("", 18) == ()
    with pytest.raises(ValueError):
        parse_support("18", 18)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--group", "s3", "1"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "groupdet", "classify", "--group", "g18-4", "8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "class: TwoNotThree" in proc.stdout
