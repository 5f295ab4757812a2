import json

import pytest

from qgenocchi.cli import (
    HARD_IDENTITIES,
    SHIFT_LAW_MAX_SHIFT,
    SHIFT_LAW_TRIALS,
    build_parser,
    exit_code_for,
    main,
    shift_law_record,
)


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_numbers_csv_contains_anchor_rows(capsys):
    code, out, _ = run_cli(capsys, ["numbers", "--nmax", "6", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "identity,index,value"
    assert "G,1,1" in lines
    assert "G,5,0" in lines
    assert "B,2,1/6" in lines
    assert "E,3,1/4" in lines


def test_numbers_json_bernoulli_anchor(capsys):
    code, out, _ = run_cli(capsys, ["numbers", "--nmax", "12"])
    assert code == 0
    report = json.loads(out)
    rows = {
        (r["identity"], r["params"]["n"]): r["details"]["value"]
        for r in report["records"]
    }
    assert rows[("B", 12)] == "-691/2730"
    assert rows[("G", 1)] == "1"
    assert rows[("G^(2)", 0)] == "1/2"


def test_qtable_evaluation_at_quarter(capsys):
    code, out, _ = run_cli(capsys, ["qtable", "--nmax", "4", "--kmax", "2", "--q", "1/4"])
    assert code == 0
    report = json.loads(out)
    by_key = {
        (r["identity"], tuple(sorted(r["params"].items()))): r["details"]
        for r in report["records"]
    }
    cell = by_key[("q_binomial", (("k", 2), ("n", 4)))]
    assert cell["value_at_q"] == "357/256"


def test_qtable_non_square_q_flags_half_powers(capsys):
    code, out, _ = run_cli(capsys, ["qtable", "--nmax", "4", "--kmax", "3", "--q", "1/3"])
    assert code == 0
    report = json.loads(out)
    binom = [r for r in report["records"] if r["identity"] == "q_binomial"]
    psum = [r for r in report["records"] if r["identity"] == "q_power_sum"]
    # binomial cells only involve integer q-powers: always evaluable
    assert all(r["details"]["value_at_q"] != "REQUIRES-SQUARE-Q" for r in binom)
    # power sums mix half-integer q-powers for even m
    assert any(r["details"]["value_at_q"] == "REQUIRES-SQUARE-Q" for r in psum)


def test_qtable_csv_drops_eval_column_without_q(capsys):
    code, out, _ = run_cli(capsys, ["qtable", "--nmax", "2", "--kmax", "1", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[0] == "identity,params,value"
    code, out, _ = run_cli(
        capsys, ["qtable", "--nmax", "2", "--kmax", "1", "--format", "csv", "--q", "1/4"]
    )
    assert code == 0
    assert out.splitlines()[0] == "identity,params,value,value_at_q"


def test_limits_csv_all_pass(capsys):
    code, out, _ = run_cli(capsys, ["limits", "--nmax", "3", "--kmax", "3", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "identity,params,limit,classical,status"
    assert len(lines) > 1
    assert all(line.endswith(",PASS") for line in lines[1:])


def test_verify_small_grid_roundtrip_and_order(capsys):
    code, out, _ = run_cli(capsys, ["verify", "--nmax", "2", "--kmax", "2"])
    assert code == 0
    report = json.loads(out)
    assert json.dumps(report, sort_keys=True, indent=2) + "\n" == out
    keys = [
        (r["identity"], tuple(sorted(r["params"].items())), r["convention"] or "")
        for r in report["records"]
    ]
    assert keys == sorted(keys)
    assert report["version"] == "0.1.0"
    assert report["config"]["command"] == "verify"


def test_verify_summary_counts_records(capsys):
    _, out, _ = run_cli(capsys, ["verify", "--nmax", "3", "--kmax", "3"])
    report = json.loads(out)
    total = sum(v["PASS"] + v["FAIL"] for v in report["summary"].values())
    assert total == len(report["records"])
    assert report["summary"]["alt_qsum"] == {"PASS": 18, "FAIL": 0}
    assert report["summary"]["shift_law"] == {"PASS": 1, "FAIL": 0}
    # the printed closed forms are reported, not gated
    assert report["summary"]["classical_limit_g"]["FAIL"] > 0


def test_verify_convention_filter(capsys):
    _, out, _ = run_cli(capsys, ["verify", "--nmax", "2", "--kmax", "2", "--convention", "q"])
    report = json.loads(out)
    conventions = {r["convention"] for r in report["records"]}
    assert "q2" not in conventions
    assert "q" in conventions
    assert report["config"]["conventions"] == ["q"]


def test_verify_hard_failures_gate_exit_code():
    fail_hard = {"records": [{"identity": "alt_qsum", "status": "FAIL"}]}
    fail_soft = {"records": [{"identity": "closed_form_g", "status": "FAIL"}]}
    all_pass = {"records": [{"identity": "alt_qsum", "status": "PASS"}]}
    assert exit_code_for(fail_hard) == 1
    assert exit_code_for(fail_soft) == 0
    assert exit_code_for(all_pass) == 0
    assert "closed_form_g" not in HARD_IDENTITIES
    assert "alt_qsum" in HARD_IDENTITIES


def test_shift_law_record_shape():
    rec = shift_law_record()
    assert rec.passed
    assert rec.params == {"trials": SHIFT_LAW_TRIALS, "max_shift": SHIFT_LAW_MAX_SHIFT}
    assert rec.details["failures"] == "0"
    assert rec.details["seed"] == "271828"


def test_bad_flags_exit_two():
    for argv in (
        ["verify", "--nmax", "0"],
        ["verify", "--kmax", "-3"],
        ["qtable", "--q", "3/2"],
        ["qtable", "--q", "not-a-number"],
        ["no-such-command"],
        [],
    ):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2, argv


def test_unwritable_out_path_exits_three(capsys):
    code, out, err = run_cli(
        capsys, ["numbers", "--nmax", "2", "--out", "/no-such-dir/report.json"]
    )
    assert code == 3
    assert out == ""
    assert "cannot write" in err


def test_out_file_matches_stdout(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["numbers", "--nmax", "4", "--out", str(target)])
    assert code == 0
    _, stdout_text, _ = run_cli(capsys, ["numbers", "--nmax", "4"])
    written = json.loads(target.read_text(encoding="utf-8"))
    direct = json.loads(stdout_text)
    # the config echo records where the report went; everything else agrees
    assert written["config"].pop("out") == str(target)
    assert direct["config"].pop("out") is None
    assert written == direct


def test_in_process_determinism(capsys):
    _, first, _ = run_cli(capsys, ["verify", "--nmax", "3", "--kmax", "3"])
    _, second, _ = run_cli(capsys, ["verify", "--nmax", "3", "--kmax", "3"])
    assert first == second


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "0.1.0" in capsys.readouterr().out


def test_parser_defaults():
    args = build_parser().parse_args(["verify"])
    assert (args.nmax, args.kmax) == (8, 8)
    assert args.convention == "all"
    assert args.format == "json"
    assert args.q is None and args.out is None
