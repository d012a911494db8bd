import json

import pytest

from shannon1d.cli import main
from shannon1d.entropy import entropy_sum, uncertainty
from shannon1d.systems import OscillatorState

TABLE1_HEADER = ("parameter,sx_n0,sx_n1,sx_n2,"
                 "sp_n0,sp_n1,sp_n2,st_n0,st_n1,st_n2")


def test_table_output_is_deterministic(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path in paths:
        rc = main(["table", "1", "--grid", "0.06,1.0,8.005",
                   "--out", str(path)])
        assert rc == 0
    first, second = (p.read_bytes() for p in paths)
    assert first == second


def test_table_csv_layout(capsys):
    assert main(["table", "1", "--grid", "1.0"]) == 0
    out = capsys.readouterr().out
    assert "\r" not in out
    lines = out.splitlines()
    assert lines[0] == "# schema_version=1"
    assert lines[1] == "# command=table"
    assert "# units=a0=1.0;hbar=1.0;m=1.0" in lines
    assert "# abs_tolerance=1e-10" in lines
    assert "# precision=4" in lines
    header_at = lines.index(TABLE1_HEADER)
    row = lines[header_at + 1].split(",")
    assert row[0] == "1.0000"
    assert row[1] == "1.0724"          # sx_n0
    assert row[7] == "2.1447"          # st_n0
    assert len(lines) == header_at + 2


def test_table_json_round_trip(capsys):
    assert main(["table", "2", "--grid", "0.5", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema_version"] == "1"
    assert data["command"] == "table"
    assert data["table"] == 2
    payload = data["payload"]
    assert payload["system"] == "box"
    assert payload["n_list"] == [1, 2, 3]
    (row,) = payload["rows"]
    assert row["parameter"] == 0.5
    # full-precision floats survive the envelope exactly
    assert row["sx"][0] == pytest.approx(-1.0, abs=1e-8)
    assert row["st"][0] == row["sx"][0] + row["sp"][0]


def test_state_text_report(capsys):
    assert main(["state", "ho", "--n", "0", "--omega", "1.0"]) == 0
    out = capsys.readouterr().out
    assert "system = ho" in out
    assert "n = 0" in out
    assert "omega = 1.0000" in out
    assert "sx = 1.0724" in out
    assert "sp = 1.0724" in out
    assert "st = 2.1447" in out
    assert "product = 0.5000" in out
    assert "-0.0000" not in out        # negative zero is normalized away


def test_state_json_matches_library(capsys):
    assert main(["state", "ho", "--n", "1", "--omega", "2.0",
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    state = OscillatorState(1, 2.0)
    entropy = entropy_sum(state)
    spread = uncertainty(state)
    payload = data["payload"]
    assert payload["entropy"]["sx"] == entropy.sx
    assert payload["entropy"]["st"] == entropy.st
    assert payload["uncertainty"]["dx"] == spread.dx
    assert payload["uncertainty"]["product"] == spread.product


def test_state_narrow_box_reproduces_negative_entropy(capsys):
    assert main(["state", "box", "--n", "1", "--xc", "0.5"]) == 0
    out = capsys.readouterr().out
    assert "sx = -1.0000" in out
    assert "sp = 3.2120" in out
    assert "st = 2.2120" in out


@pytest.mark.parametrize("argv", [
    ["state", "ho", "--n", "0", "--xc", "1.0"],        # wrong parameter flag
    ["state", "box", "--n", "1", "--omega", "1.0"],    # wrong parameter flag
    ["state", "ho", "--n", "0"],                       # parameter missing
    ["state", "ho", "--n", "-1", "--omega", "1.0"],    # bad quantum number
    ["state", "ho", "--n", "0", "--omega", "-1.0"],    # bad frequency
    ["table", "1", "--grid", "abc"],
    ["table", "1", "--grid", "1.0", "--tolerance", "-1"],
    ["figure", "9"],
    ["crossing", "ho", "--n", "5"],                    # no default bracket
    ["validate", "--tolerance", "-1"],
])
def test_usage_errors_exit_one(argv, capsys):
    assert main(argv) == 1
    assert "Error" in capsys.readouterr().err


def test_figure_writes_data_and_image(tmp_path, capsys):
    out = tmp_path / "fig5.csv"
    assert main(["figure", "5", "--out", str(out), "--tolerance", "1e-8"]) == 0
    err = capsys.readouterr().err
    image = tmp_path / "fig5.png"
    assert out.exists()
    assert image.exists()
    assert image.read_bytes()[:4] == b"\x89PNG"
    assert str(image) in err
    header = out.read_text().splitlines()
    assert "series,panel,x,y" in header


def test_figure_no_plot_skips_image(tmp_path):
    out = tmp_path / "fig3.csv"
    assert main(["figure", "3", "--out", str(out), "--no-plot"]) == 0
    assert out.exists()
    assert not (tmp_path / "fig3.png").exists()


def test_figure_json_structure(capsys):
    assert main(["figure", "3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["figure"] == 3
    series = data["payload"]["series"]
    assert len(series) == 6
    assert any(s["label"] == "rho n=0 omega=0.5" for s in series)
    assert all(len(s["x"]) == len(s["y"]) == 201 for s in series)


def test_crossing_text_report(capsys):
    assert main(["crossing", "ho", "--n", "0"]) == 0
    out = capsys.readouterr().out
    assert "bracket = [0.5000, 2.0000]" in out
    assert "omega = 1.0000" in out
    assert "entropy = 1.0724" in out


def test_crossing_reports_numerical_failure(capsys):
    # no sign change on the bracket: a numerical failure, not a usage error
    rc = main(["crossing", "ho", "--n", "0", "--bracket", "2", "3"])
    assert rc == 2
    assert "numerical failure" in capsys.readouterr().err


def test_crossing_box_with_explicit_bracket(capsys):
    rc = main(["crossing", "box", "--n", "1", "--bracket", "3", "5",
               "--tolerance", "1e-6"])
    assert rc == 0
    assert "xc = 4.1077" in capsys.readouterr().out


def test_validate_subset_passes(capsys):
    assert main(["validate", "--only", "table1:omega=1.0000"]) == 0
    out = capsys.readouterr().out
    assert "gated values: 9 checked, 9 passed" in out
    assert "result: PASS" in out


def test_validate_subset_fails_at_tight_tolerance(capsys):
    rc = main(["validate", "--only", "table1:omega=1.0000",
               "--tolerance", "1e-9"])
    assert rc == 3
    captured = capsys.readouterr()
    assert "FAIL" in captured.out
    assert "validation failed" in captured.err


def test_validate_csv_rows(capsys):
    assert main(["validate", "--only", "table1:omega=1.0000",
                 "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert "kind,key,expected,computed,deviation,gated,passed,detail" in out
    assert "value,table1:omega=1.0000:n=0:sx," in out


def test_env_var_overrides_quadrature_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("SHANNON1D_ABS_TOL", "1e-06")
    assert main(["state", "ho", "--n", "0", "--omega", "1.0",
                 "--format", "csv"]) == 0
    assert "# abs_tolerance=1e-06" in capsys.readouterr().out


def test_env_var_rejects_garbage(capsys, monkeypatch):
    monkeypatch.setenv("SHANNON1D_ABS_TOL", "abc")
    assert main(["state", "ho", "--n", "0", "--omega", "1.0"]) == 1
    assert "SHANNON1D_ABS_TOL" in capsys.readouterr().err
