"""CLI surface: suites, report formats, determinism, eval/table commands."""

import csv
import io
import json
import contextlib

import pytest

from qaskey.cli import main, render_json, run_suite
from qaskey.identities import ParamGrid


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_verify_small_suite_json():
    code, out, err = run_cli(["verify", "--suite", "weight-recurrence", "--format", "json"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["suite"] == "weight-recurrence"
    assert set(doc["summary"]) == {"pass", "fail", "error"}
    assert doc["summary"]["fail"] == 0 and doc["summary"]["error"] == 0
    assert doc["summary"]["pass"] == len(doc["checks"]) > 0
    assert all(rec["verdict"] == "pass" for rec in doc["checks"])
    assert "wallTimeMs" in doc


def test_verify_respects_qparams_flag():
    code, out, _ = run_cli(["verify", "--suite", "weight-recurrence",
                            "--qparams", "1/2,2/3", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["grid"]["qparams"] == ["1/2,2/3"]
    assert len(doc["checks"]) == 2  # ratio identity + representation check


def test_verify_rejects_inadmissible_qparams():
    code, _, err = run_cli(["verify", "--suite", "duality", "--qparams", "3/2,1"])
    assert code == 2
    assert "t" in err


def test_verify_rejects_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        run_cli(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_every_declared_suite_is_wired_and_green():
    from qaskey.cli import SUITE_NAMES, exit_code_for

    grid = ParamGrid(lmax=1)
    for name in SUITE_NAMES:
        doc = run_suite(name, grid)
        assert doc["summary"]["pass"] == len(doc["checks"]) > 0, name
        assert exit_code_for(doc) == 0, name


def test_report_determinism_across_runs_and_jobs():
    d1 = run_suite("orthogonality", ParamGrid())
    d2 = run_suite("orthogonality", ParamGrid(), jobs=3)
    d1.pop("wallTimeMs")
    d2.pop("wallTimeMs")
    assert render_json(d1) == render_json(d2)


def test_text_and_csv_formats():
    code, out, _ = run_cli(["verify", "--suite", "weight-recurrence", "--format", "text",
                            "--qparams", "1/2,2/3"])
    assert code == 0
    assert out.splitlines()[-1].startswith("summary: pass=")
    code, out, _ = run_cli(["verify", "--suite", "weight-recurrence", "--format", "csv",
                            "--qparams", "1/2,2/3"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["id", "verdict", "params", "witness_location", "lhs", "rhs"]
    assert all(row[1] == "pass" for row in rows[1:])


def test_verify_out_file(tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(["verify", "--suite", "weight-recurrence", "--out", str(path),
                            "--qparams", "1/2,2/3"])
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert doc["summary"]["fail"] == 0


def test_config_file(tmp_path):
    cfg = tmp_path / "grid.cfg"
    cfg.write_text("# comment\nqparams=1/2,2/3\nlmax=2\nalphas=0,1/2\n")
    code, out, _ = run_cli(["verify", "--suite", "theorem-5-1", "--config", str(cfg),
                            "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["grid"]["lmax"] == 2
    assert doc["grid"]["qparams"] == ["1/2,2/3"]
    assert doc["grid"]["alphas"] == ["0", "1/2"]
    # flags override the config file
    code, out, _ = run_cli(["verify", "--suite", "theorem-5-1", "--config", str(cfg),
                            "--grid-lmax", "1", "--format", "json"])
    doc = json.loads(out)
    assert doc["grid"]["lmax"] == 1


def test_eval_examples():
    code, out, _ = run_cli(["eval", "--family", "ultraspherical", "--n", "2",
                            "--alpha", "0", "--at", "1/2"])
    assert code == 0
    assert out.splitlines()[0] == "exact: -1/8"
    code, out, _ = run_cli(["eval", "--family", "cqu", "--n", "0",
                            "--qparams", "1/2,2/3", "--at-z", "7/5"])
    assert code == 0
    assert out.splitlines()[0] == "exact: 1"


def test_eval_qracah_top_lattice_matches_closed_form():
    from fractions import Fraction as F
    from qaskey.families import QParams, QRacahParams, qracah_at_top

    qp = QParams(F(1, 2), F(2, 3))
    alpha = qp.beta / qp.qhalf
    delta = 1 / (qp.beta * qp.qhalf * qp.q ** 4)
    qrp = QRacahParams(alpha, alpha, delta, 3, qp)
    code, out, _ = run_cli([
        "eval", "--family", "q-racah", "--n", "1", "--x", "3",
        "--alpha", str(alpha), "--beta", str(alpha), "--delta", str(delta),
        "--N", "3", "--qparams", "1/2,2/3",
    ])
    assert code == 0
    assert out.splitlines()[0] == f"exact: {qracah_at_top(1, qrp)}"


def test_eval_laurent_output():
    code, out, _ = run_cli(["eval", "--family", "cqu", "--n", "1", "--qparams", "1/2,2/3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("exact: ") and "z" in lines[0]
    assert lines[1].startswith("float: ")


def test_eval_covers_every_family_id():
    from qaskey.families import FAMILY_IDS

    argv_by_family = {
        "jacobi": ["--alpha", "1/2", "--beta", "1/3", "--at", "2/5"],
        "ultraspherical": ["--alpha", "1/2", "--at", "2/5"],
        "krawtchouk": ["--x", "1", "--p", "1/3", "--N", "3"],
        "hahn": ["--x", "1", "--alpha", "1/2", "--beta", "1/3", "--N", "3"],
        "dual-hahn": ["--x", "1", "--alpha", "1/2", "--beta", "1/3", "--N", "3"],
        "racah": ["--x", "1", "--alpha", "1/2", "--beta", "1/3", "--delta", "1/5", "--N", "3"],
        "wilson-dual": ["--m", "2", "--a", "1", "--b", "3/2", "--c", "2", "--d", "5/2"],
        "askey-wilson": ["--a", "1/3", "--b", "1/12", "--c=-1/3", "--d=-1/12",
                         "--qbase", "1/16", "--at-z", "7/5"],
        "cqu": ["--qparams", "1/2,2/3", "--at-z", "7/5"],
        "cqu-alt": ["--qparams", "1/2,2/3", "--at-z", "7/5"],
        "q-racah": ["--x", "1", "--alpha", "16/9", "--beta", "16/9",
                    "--delta", "589824/9", "--N", "3", "--qparams", "1/2,2/3"],
    }
    assert set(argv_by_family) == set(FAMILY_IDS)
    values = {}
    for family, extra in argv_by_family.items():
        code, out, err = run_cli(["eval", "--family", family, "--n", "2"] + extra)
        assert code == 0, (family, err)
        assert out.startswith("exact: "), family
        values[family] = out.splitlines()[0]
    # the two series representations of the same family agree
    assert values["cqu"] == values["cqu-alt"]


def test_eval_errors():
    code, _, err = run_cli(["eval", "--family", "nosuch", "--n", "1"])
    assert code == 2 and "unknown family" in err
    code, _, err = run_cli(["eval", "--family", "ultraspherical", "--n", "1"])
    assert code == 2 and "--alpha" in err


def test_table_qracah_weights():
    from fractions import Fraction as F
    from qaskey.families import QParams

    qp = QParams(F(1, 2), F(2, 3))
    alpha = qp.beta / qp.qhalf
    delta = 1 / (qp.beta * qp.qhalf * qp.q ** 4)
    code, out, _ = run_cli([
        "table", "--family", "q-racah-weights", "--N", "3",
        "--alpha", str(alpha), "--beta", str(alpha), "--delta", str(delta),
        "--qparams", "1/2,2/3",
    ])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "exact", "float"]
    assert len(rows) == 5
    assert rows[1][1] == "1"  # first weight


def test_table_racah_weights_sum_to_total_mass():
    from fractions import Fraction as F
    from qaskey.families import RacahParams, racah_h0
    from qaskey.series import parse_rat

    code, out, _ = run_cli(["table", "--family", "racah-weights", "--N", "3",
                            "--alpha", "0", "--beta", "0", "--delta", "-5"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    total = sum(parse_rat(row[1]) for row in rows)
    assert total == racah_h0(RacahParams(F(0), F(0), 3, F(-5)))


def test_table_empty_range():
    code, out, _ = run_cli(["table", "--family", "krawtchouk-weights", "--p", "1/3",
                            "--N", "3", "--range", "1:0"])
    assert code == 0
    assert out.splitlines() == ["index,exact,float"]


def test_table_values_families():
    code, out, _ = run_cli(["table", "--family", "ultraspherical-values", "--alpha", "0",
                            "--at", "1/2", "--range", "0:3"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert rows[2][1] == "-1/8"
    code, out, _ = run_cli(["table", "--family", "cqu-values", "--qparams", "1/2,2/3",
                            "--at-z", "7/5", "--range", "0:2"])
    assert code == 0
    assert len(out.splitlines()) == 4
