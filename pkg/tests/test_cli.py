import json

import pytest

import stalg
from stalg import Field, Multivector, PlaneWaveParams, dirac_planewave, joyce_planewave
from stalg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse(out):
    return json.loads(out)


def test_verify_core_exact_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "core", "--mode", "exact")
    assert code == 0
    report = parse(out)
    assert report["counts"]["fail"] == 0
    assert report["mode"] == "exact"
    assert report["seed"] == 101


def test_verify_all_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "all")
    assert code == 0
    assert parse(out)["counts"]["fail"] == 0


def test_verify_unknown_suite_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "nosuch"])
    assert err.value.code == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_planewave_joyce_zero(capsys):
    code, out, _ = run_cli(
        capsys, "planewave", "--m", "3", "--k", "4", "--omega-sign", "+", "--a", "1"
    )
    assert code == 0
    report = parse(out)
    assert report["residual_zero"] is True
    assert report["field"]["terms"][0]["momentum"] == ["5/1", "4/1", "0/1", "0/1"]


def test_planewave_dirac_check_fails(capsys):
    code, out, _ = run_cli(
        capsys,
        "planewave", "--m", "3", "--k", "4", "--a", "1", "--check", "dirac",
    )
    assert code == 1
    assert parse(out)["residual_zero"] is False


def test_planewave_massless_dirac_zero(capsys):
    code, out, _ = run_cli(
        capsys,
        "planewave", "--m", "0", "--k", "1", "--a", "1", "--check", "dirac",
    )
    assert code == 0
    assert parse(out)["residual_zero"] is True


def test_planewave_complex_parameters(capsys):
    code, out, _ = run_cli(
        capsys,
        "planewave", "--m", "3", "--k", "4", "--a", "1", "--b", "0,1",
    )
    assert code == 0


def test_planewave_k_zero_requires_rest(capsys):
    code, _, err = run_cli(capsys, "planewave", "--m", "3", "--k", "0", "--a", "1")
    assert code == 2
    assert "rest" in err


def test_planewave_rest_basis(capsys):
    code, out, _ = run_cli(
        capsys, "planewave", "--m", "3", "--k", "0", "--omega-sign", "-", "--rest"
    )
    assert code == 0
    report = parse(out)
    assert len(report["rest_basis"]) == 4
    assert report["degenerate"] is False
    assert all(entry["residual"]["zero"] for entry in report["rest_basis"])


def test_planewave_off_shell_exact_is_input_error(capsys):
    code, _, err = run_cli(capsys, "planewave", "--m", "1", "--k", "1", "--a", "1")
    assert code == 2
    assert "rational" in err


def test_planewave_float_mode(capsys):
    code, out, _ = run_cli(
        capsys,
        "planewave", "--m", "1", "--k", "1", "--a", "1", "--mode", "float",
    )
    assert code == 0
    report = parse(out)
    assert report["residual_zero"] is True
    assert report["residual_norm"] <= 1e-12


def test_decompose_worked_solution(tmp_path, capsys):
    f = joyce_planewave(PlaneWaveParams.of(1, 2, 0, -1), "+", 4, 3)
    path = tmp_path / "field.json"
    path.write_text(json.dumps(f.to_json_dict()))
    code, out, _ = run_cli(capsys, "decompose", str(path), "--m", "3")
    assert code == 0
    report = parse(out)
    assert report["p0_split"]["plus"]["residuals"]["dirac_plus"]["zero"]
    assert report["p0_split"]["minus"]["residuals"]["dirac_minus"]["zero"]
    assert report["p12_split"]["plus"]["residuals"]["hestenes_plus"]["zero"]
    assert report["p12_split"]["minus"]["residuals"]["hestenes_minus"]["zero"]
    assert report["real_even_pair"]["plus"]["residuals"]["hestenes_plus"]["zero"]
    assert report["real_even_pair"]["minus"]["residuals"]["hestenes_minus"]["zero"]
    assert report["reconstruction_ok"] is True
    assert report["warnings"] == []


def test_decompose_zero_field(tmp_path, capsys):
    path = tmp_path / "zero.json"
    path.write_text(json.dumps(Field.zero().to_json_dict()))
    code, out, _ = run_cli(capsys, "decompose", str(path), "--m", "3")
    assert code == 0
    report = parse(out)
    assert report["reconstruction_ok"] is True
    for part in ("plus", "minus"):
        assert report["p0_split"][part]["field"]["terms"] == []


def test_decompose_odd_field_warns(tmp_path, capsys):
    odd = Field.single(
        stalg.basis_vector(0), stalg.FourMomentum.along_x(5, 4)
    )
    path = tmp_path / "odd.json"
    path.write_text(json.dumps(odd.to_json_dict()))
    code, out, err = run_cli(capsys, "decompose", str(path), "--m", "3")
    assert code == 0
    report = parse(out)
    assert report["real_even_pair"] is None
    assert report["warnings"]
    assert "even" in err
    # the gamma_0 split is still emitted
    assert report["p0_split"]["plus"]["field"]["terms"]


def test_decompose_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "decompose", str(path), "--m", "3")
    assert code == 2
    assert "malformed" in err


def test_decompose_missing_file(capsys):
    code, _, err = run_cli(capsys, "decompose", "/nonexistent.json", "--m", "3")
    assert code == 2


def test_quartet_command(tmp_path, capsys):
    f = dirac_planewave(Multivector.scalar(1), 5, 4, 3)
    path = tmp_path / "dirac.json"
    path.write_text(json.dumps(f.to_json_dict()))
    code, out, _ = run_cli(capsys, "quartet", str(path), "--m", "3")
    assert code == 0
    report = parse(out)
    assert len(report["fields"]) == 4
    assert all(entry["zero"] for entry in report["residuals"])
    assert report["real_rank"] == 4
    assert report["rank_scalars"] == "real"


def test_quartet_rejects_zero_field(tmp_path, capsys):
    path = tmp_path / "zero.json"
    path.write_text(json.dumps(Field.zero().to_json_dict()))
    code, _, err = run_cli(capsys, "quartet", str(path), "--m", "3")
    assert code == 1
    assert "seed" in err


def test_quartet_rejects_non_solution(tmp_path, capsys):
    f = Field.single(Multivector.scalar(1), stalg.FourMomentum.along_x(5, 4))
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(f.to_json_dict()))
    code, _, err = run_cli(capsys, "quartet", str(path), "--m", "3")
    assert code == 1
    assert "Dirac" in err


def test_oracle_multivector(tmp_path, capsys):
    m = stalg.basis_vector(1) * stalg.basis_vector(3)
    path = tmp_path / "mv.json"
    path.write_text(json.dumps(m.to_json_dict()))
    code, out, _ = run_cli(capsys, "oracle", str(path))
    assert code == 0
    report = parse(out)
    assert report["kind"] == "multivector"
    assert report["max_discrepancy"] == 0.0
    assert all(c["status"] == "pass" for c in report["checks"])


def test_oracle_field(tmp_path, capsys):
    f = joyce_planewave(PlaneWaveParams.of(1, 0, 2, 0), "-", 4, 3)
    path = tmp_path / "field.json"
    path.write_text(json.dumps(f.to_json_dict()))
    code, out, _ = run_cli(capsys, "oracle", str(path))
    assert code == 0
    assert parse(out)["kind"] == "field"


def test_oracle_rejects_unknown_shape(tmp_path, capsys):
    path = tmp_path / "odd.json"
    path.write_text(json.dumps({"neither": 1}))
    code, _, err = run_cli(capsys, "oracle", str(path))
    assert code == 2


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "projectors", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["counts"]["fail"] == 0


def test_seed_determinism(capsys):
    _, first, _ = run_cli(capsys, "verify", "--suite", "splits", "--seed", "7")
    _, second, _ = run_cli(capsys, "verify", "--suite", "splits", "--seed", "7")
    assert first == second


def test_stdout_is_valid_json_for_every_command(tmp_path, capsys):
    f = joyce_planewave(PlaneWaveParams.of(1), "+", 4, 3)
    path = tmp_path / "f.json"
    path.write_text(json.dumps(f.to_json_dict()))
    for argv in (
        ["verify", "--suite", "projectors"],
        ["planewave", "--m", "3", "--k", "4", "--a", "1"],
        ["decompose", str(path), "--m", "3"],
        ["oracle", str(path)],
    ):
        _, out, _ = run_cli(capsys, *argv)
        parse(out)
