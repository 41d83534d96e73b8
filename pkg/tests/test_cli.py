import io
import json
import contextlib

from hookexp.cli import main


def run_cli(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_expand_bfile_discriminant():
    code, out, _ = run_cli("expand", "--exponent", "24", "--order", "6",
                           "--shift", "1", "--format", "bfile")
    assert code == 0
    assert out == "1 1\n2 -24\n3 252\n4 -1472\n5 4830\n6 -6048\n"


def test_expand_plain_rational_exponent():
    code, out, _ = run_cli("expand", "--exponent", "-1/2", "--order", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0: 1"
    assert lines[1] == "1: 1/2"


def test_expand_formal_beta():
    code, out, _ = run_cli("expand", "--exponent", "beta", "--order", "2")
    assert code == 0
    assert out.splitlines() == [
        '0: ["1"]',
        '1: ["1", "-1"]',
        '2: ["2", "-5/2", "1/2"]',
    ]


def test_expand_json_roundtrip():
    code, out, _ = run_cli("expand", "--exponent", "3", "--order", "4",
                           "--format", "json")
    assert code == 0
    assert json.loads(out) == ["1", "-3", "0", "5", "0"]


def test_expand_beta_json():
    code, out, _ = run_cli("expand", "--exponent", "beta", "--order", "1",
                           "--format", "json")
    assert json.loads(out) == [["1"], ["1", "-1"]]


def test_expand_rejects_bad_exponent_and_bfile_beta():
    code, _, err = run_cli("expand", "--exponent", "1.5", "--order", "3")
    assert code == 2 and "error" in err
    code, _, err = run_cli("expand", "--exponent", "beta", "--order", "3",
                           "--format", "bfile")
    assert code == 2
    code, _, err = run_cli("expand", "--exponent", "-1/2", "--order", "3",
                           "--format", "bfile")
    assert code == 2  # fractional coefficients cannot go into a b-file


def test_expand_shift_pads_with_zeros():
    code, out, _ = run_cli("expand", "--exponent", "1", "--order", "2",
                           "--shift", "4")
    assert code == 0
    assert out.splitlines() == ["0: 0", "1: 0", "2: 0"]


def test_verify_single_pass_and_exit_codes():
    code, out, _ = run_cli("verify", "--id", "pentagonal-beta2",
                           "--order", "8")
    assert code == 0
    assert out.startswith("pentagonal-beta2: pass")


def test_verify_single_json_schema():
    code, out, _ = run_cli("verify", "--id", "macdonald", "--t", "3",
                           "--order", "6", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert list(d) == ["id", "params", "status", "checked_range",
                       "first_mismatch", "elapsed_ms"]
    assert d["status"] == "pass"
    assert d["params"]["t"] == [3]


def test_verify_failing_check_exits_1():
    code, out, _ = run_cli("verify", "--id", "prop-6-12", "--format", "json")
    assert code == 1
    d = json.loads(out)
    assert d["status"] == "fail"
    assert d["first_mismatch"]["location"] == "n=3"


def test_verify_usage_errors():
    assert run_cli("verify")[0] == 2
    assert run_cli("verify", "--id", "no-such-check")[0] == 2
    assert run_cli("verify", "--id", "main-identity", "--t", "5")[0] == 2
    assert run_cli("verify", "--id", "main-identity", "--all")[0] == 2


def test_verify_all_with_budget():
    code, out, _ = run_cli("verify", "--all", "--order", "0",
                           "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 34
    assert [r["id"] for r in reports] == sorted(r["id"] for r in reports)
    assert all(r["status"] == "pass" for r in reports)


def test_verify_all_plain_summary_line():
    code, out, _ = run_cli("verify", "--all", "--order", "1")
    assert code == 0
    assert out.rstrip().splitlines()[-1] == "34 checks: 34 pass, 0 fail"


def test_list_identities():
    code, out, _ = run_cli("list-identities")
    assert code == 0
    lines = out.rstrip("\n").split("\n")
    assert len(lines) == 34
    ids = [line.split(":", 1)[0] for line in lines]
    assert ids == sorted(ids)
    assert any(line.startswith("main-identity: ") for line in lines)


def test_partitions_listing():
    code, out, _ = run_cli("partitions", "--n", "4")
    assert code == 0
    assert out.splitlines() == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]


def test_partitions_t_core_filter():
    code, out, _ = run_cli("partitions", "--n", "5", "--t-core", "3")
    assert code == 0
    assert out.splitlines() == ["3,1,1"]


def test_cores_methods_agree():
    a = run_cli("cores", "--n", "8", "--t", "5", "--method", "filter")
    b = run_cli("cores", "--n", "8", "--t", "5", "--method", "coding")
    assert a == b and a[0] == 0


def test_coding_golden_output():
    code, out, _ = run_cli("coding", "--parts", "14,10,6,6,4,4,4,2,2,2",
                           "--t", "5")
    assert code == 0
    assert out == (
        "partition: 14,10,6,6,4,4,4,2,2,2\n"
        "t: 5\n"
        "H-set: [23, 18, 13, 12, 9, 8, 7, 4, 3, 2, -1, -2, -3, -4, -5]\n"
        "U-coding: (-5, -4, 12, 23, 9)\n"
        "V-coding: (5, 16, 2, -12, -11)\n"
        "N-coding: (-2, -2, 1, 3, 0)\n"
        "weight: 54\n"
        "beta=25 product: 60035976\n"
    )


def test_coding_usage_errors():
    assert run_cli("coding", "--parts", "3,1,1", "--t", "5")[0] == 2
    assert run_cli("coding", "--parts", "2,1", "--t", "4")[0] == 2
    assert run_cli("coding", "--parts", "1,3", "--t", "5")[0] == 2


def test_seq_goldens():
    cases = {
        ("tau", 5): [1, -24, 252, -1472, 4830],
        ("a006128", 6): [1, 3, 6, 12, 20, 35],
        ("a057623", 5): [1, 5, 29, 218, 1814],
        ("a109085", 7): [1, 1, 3, 10, 38, 153, 646],
        ("pp", 5): [2, 5, 10, 20, 36],
    }
    for (name, count), want in cases.items():
        code, out, _ = run_cli("seq", "--name", name, "--count", str(count),
                               "--format", "json")
        assert code == 0
        assert json.loads(out) == want, name


def test_seq_bfile_is_one_based_with_no_trailing_whitespace():
    code, out, _ = run_cli("seq", "--name", "tau", "--count", "3")
    assert code == 0
    assert out == "1 1\n2 -24\n3 252\n"
    for line in out.splitlines():
        assert line == line.rstrip()


def test_seq_rejects_bad_count():
    assert run_cli("seq", "--name", "tau", "--count", "0")[0] == 2


def test_revert_plain():
    code, out, _ = run_cli("revert", "--order", "4")
    assert code == 0
    assert out.splitlines() == ["0: 0", "1: 1", "2: 1", "3: 3", "4: 10"]
    other = run_cli("revert", "--order", "4", "--method", "iterate")
    assert other[1] == out


def test_unknown_subcommand_is_usage_error():
    assert run_cli("frobnicate")[0] == 2
    assert run_cli()[0] == 2


def test_console_entry_point_matches_library(tmp_path):
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "hookexp.cli", "seq", "--name", "tau",
         "--count", "3"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "1 1\n2 -24\n3 252\n"
