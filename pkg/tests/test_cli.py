"""Command-line surface: exit codes, serialization, round trips."""

import csv
import io
import json
import math
from contextlib import redirect_stderr, redirect_stdout

import pytest

from legshift.cli import EXIT_DOMAIN, EXIT_NUMERICAL, EXIT_OK, EXIT_PARSE, main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_eval_q_oracle():
    code, out, _ = run_cli(["eval", "--fn", "Q", "--nu", "0", "--mu", "0", "--z", "2"])
    assert code == EXIT_OK
    rec = json.loads(out)
    assert abs(rec["value_re"] - 0.5 * math.log(3.0)) < 1e-9
    assert abs(rec["value_im"]) < 1e-9
    assert rec["region"] == "off-cut"


def test_eval_on_cut_without_side_is_domain_error():
    code, _out, err = run_cli(["eval", "--fn", "P", "--nu", "0.5", "--mu", "0.3", "--z", "0.4"])
    assert code == EXIT_DOMAIN
    assert "cut" in err


def test_eval_on_cut_with_side():
    code, out, _ = run_cli(
        ["eval", "--fn", "P", "--nu", "0.5", "--mu", "0.3", "--z", "0.4", "--side", "+"]
    )
    assert code == EXIT_OK
    assert json.loads(out)["region"] == "on-cut"


def test_eval_complex_parameters_as_re_im():
    code, out, _ = run_cli(
        ["eval", "--fn", "P", "--nu", "0.5+0.3j", "--mu", "0.1", "--z", "2.0"]
    )
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["nu_re"] == 0.5 and rec["nu_im"] == 0.3
    assert not any(isinstance(v, complex) for v in rec.values())


def test_verify_unknown_identity_is_parse_error():
    code, _out, err = run_cli(["verify", "--id", "NOPE", "--defaults"])
    assert code == EXIT_PARSE
    assert "unknown identity" in err


def test_verify_bad_argument_is_parse_error():
    code, _out, _err = run_cli(["verify", "--id"])
    assert code == EXIT_PARSE


def test_verify_single_point():
    code, out, _ = run_cli(
        ["verify", "--id", "WEYL_MMINUS_Q", "--nu", "0.6", "--mu", "0.3",
         "--lam", "0.7", "--z", "2.0"]
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].startswith("identity=WEYL_MMINUS_Q")
    assert "pass=True" in lines[0]
    assert lines[-1].startswith("summary identity=WEYL_MMINUS_Q points=1")


def test_verify_defaults_json_format():
    code, out, _ = run_cli(
        ["verify", "--id", "WEYL_MPLUS_P", "--defaults", "--format", "json"]
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["all_passed"]
    assert payload["summaries"][0]["points"] == 8


def test_verify_canary_exits_nonzero():
    code, out, _ = run_cli(
        ["verify", "--id", "WEYL_MPLUS_P", "--defaults", "--canary", "1e-6"]
    )
    assert code == EXIT_NUMERICAL
    assert "pass=False" in out


def test_verify_grid_file(tmp_path):
    grid = [
        {"nu": 0.6, "mu": 0.3, "lam": 0.7, "z": 2.0},
        {"nu": 0.8, "mu": -0.2, "lam": 1.1, "z": 2.5},
    ]
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(grid))
    code, out, _ = run_cli(
        ["verify", "--id", "WEYL_MMINUS_Q", "--grid-file", str(path)]
    )
    assert code == EXIT_OK
    assert "points=2" in out and "passed=2" in out


def test_sweep_fn_row_count_and_consistency():
    code, out, _ = run_cli(
        ["sweep", "--fn", "P", "--nu", "0.5", "--mu", "0.25", "--z", "1.5:3.5:5"]
    )
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["parameter", "re(value)", "im(value)", "err_estimate"]
    assert len(rows) == 6
    # middle row must agree bit-exactly with a single eval at the same point
    z = float(rows[3][0])
    _code, eval_out, _ = run_cli(
        ["eval", "--fn", "P", "--nu", "0.5", "--mu", "0.25", "--z", repr(z)]
    )
    rec = json.loads(eval_out)
    assert float(rows[3][1]) == rec["value_re"]
    assert float(rows[3][2]) == rec["value_im"]


def test_sweep_identity_columns(tmp_path):
    path = tmp_path / "sweep.csv"
    code, _out, _ = run_cli(
        ["sweep", "--id", "WEYL_MMINUS_Q", "--nu", "0.6", "--mu", "0.3",
         "--lam", "0.4:1.2:4", "--z", "2.0", "--output", str(path)]
    )
    assert code == EXIT_OK
    rows = list(csv.reader(path.open()))
    assert rows[0][-2:] == ["rel_err", "pass"]
    assert len(rows) == 5
    assert all(r[-1] == "True" for r in rows[1:])
    # repr serialization round-trips bit exactly
    for r in rows[1:]:
        assert repr(float(r[1])) == r[1]


def test_sweep_requires_exactly_one_axis():
    code, _out, _err = run_cli(
        ["sweep", "--fn", "P", "--nu", "0.1:0.9:3", "--mu", "0.1:0.9:3", "--z", "2.0"]
    )
    assert code == EXIT_DOMAIN
    code, _out, _err = run_cli(["sweep", "--fn", "P", "--nu", "0.5", "--z", "2.0"])
    assert code == EXIT_DOMAIN


def test_catalog_json_lists_all_identities():
    code, out, _ = run_cli(["catalog"])
    assert code == EXIT_OK
    entries = json.loads(out)
    assert len(entries) == 24
    assert all({"id", "description", "formula", "default_grid"} <= set(e) for e in entries)


def test_unknown_subcommand_is_parse_error():
    code, _out, _err = run_cli(["frobnicate"])
    assert code == EXIT_PARSE
