import json

import pytest

from ecal.cli import run
from ecal.scenario_io import REPRODUCE_TARGETS, reproduce

MINIMAL_SCENARIO = {
    "samples": 256,
    "mlp": {"layers": [6, 5, 5, 5, 3]},
    "epochs": 10,
    "inference_batch": 77,
    "gamma": 1000,
}


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "default.json"
    path.write_text(json.dumps(MINIMAL_SCENARIO), encoding="utf-8")
    return str(path)


def _lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_transmit_prints_reference_bits(capsys):
    assert run(["transmit", "--tech", "ble5", "--samples", "256", "--precision", "64"]) == 0
    lines = _lines(capsys)
    assert "B_T,17728" in lines
    assert "E_T_b_J_per_b,3.1628e-09" in lines


def test_transmit_strict_mode_drops_override(capsys):
    assert run(["transmit", "--tech", "lorawan", "--samples", "256"]) == 0
    assert "B_T,18796" in _lines(capsys)
    assert run(["transmit", "--tech", "lorawan", "--samples", "256", "--strict-eq2"]) == 0
    assert "B_T,18528" in _lines(capsys)


def test_storage_subcommand(capsys):
    assert run(["storage", "--storage", "hdd", "--samples", "256"]) == 0
    lines = _lines(capsys)
    assert "payload_bits,16384" in lines
    assert any(line.startswith("E_storage_J,") for line in lines)


def test_preprocess_single_sample_minmax(capsys):
    assert run(["preprocess", "--method", "minmax", "--samples", "1", "--invalid", "0"]) == 0
    assert "flops,1" in _lines(capsys)


def test_preprocess_normalization_reference(capsys):
    assert run(["preprocess", "--method", "normalization", "--samples", "256"]) == 0
    lines = _lines(capsys)
    assert "flops,1533" in lines
    assert "E_pre_J,2.1462e-05" in lines


def test_train_cost_reports_flop_counts(capsys, scenario_file):
    assert run(["train-cost", "--scenario", scenario_file]) == 0
    lines = _lines(capsys)
    assert "M_FP,226" in lines
    assert "M_MLP_FP,404540" in lines
    assert "M_MLP,1213620" in lines
    assert "N_inf_flops,17402" in lines
    assert any(line.startswith("E_train_J,") for line in lines)
    assert any(line.startswith("E_eval_J,") for line in lines)
    assert any(line.startswith("E_inf_J,") for line in lines)


def test_lifecycle_full_report(capsys, scenario_file):
    assert run(["lifecycle", "--scenario", scenario_file]) == 0
    lines = _lines(capsys)
    assert "B_T_dev_bits,17728" in lines
    assert "dev_denominator_bits,66880" in lines
    assert "inf_denominator_bits,20216" in lines
    assert any(line.startswith("eCAL_J_per_b,") for line in lines)


def test_lifecycle_gamma_sweep_is_decreasing(capsys, scenario_file):
    assert run(["lifecycle", "--scenario", scenario_file, "--gamma-sweep", "100,1000"]) == 0
    lines = _lines(capsys)
    assert lines[0] == "gamma,ecal_abs_J,ecal_abs_mean_J,eCAL_J_per_b"
    first = lines[1].split(",")
    second = lines[2].split(",")
    assert (int(first[0]), int(second[0])) == (100, 1000)
    assert float(first[3]) > float(second[3])


def test_lifecycle_uses_scenario_sweep_block(capsys, tmp_path):
    doc = dict(MINIMAL_SCENARIO)
    doc["sweeps"] = {"gamma": [1, 10]}
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert run(["lifecycle", "--scenario", str(path)]) == 0
    lines = _lines(capsys)
    assert len(lines) == 3
    assert lines[1].startswith("1,")
    assert lines[2].startswith("10,")


def test_carbon_uses_bundled_table(capsys, scenario_file):
    assert run(["carbon", "--scenario", scenario_file]) == 0
    lines = _lines(capsys)
    assert lines[0] == ("gamma,country_code,ci_g_per_kwh,cf_development_g,"
                       "cf_inference_g,cf_total_g")
    assert len(lines) == 6
    assert lines[1].startswith("1000,DE,425")
    assert lines[5].startswith("1000,FI,92")
    totals = [float(line.split(",")[5]) for line in lines[1:]]
    assert totals == sorted(totals, reverse=True)


def test_carbon_ci_file_flag_and_env(capsys, scenario_file, tmp_path, monkeypatch):
    ci = tmp_path / "ci.csv"
    ci.write_text(
        "country_code,country_name,year,ci_g_per_kwh\nNO,Norway,2023,30\n",
        encoding="utf-8",
    )
    assert run(["carbon", "--scenario", scenario_file, "--ci-file", str(ci)]) == 0
    assert "NO" in capsys.readouterr().out

    monkeypatch.setenv("ECAL_CI_FILE", str(ci))
    assert run(["carbon", "--scenario", scenario_file]) == 0
    out = capsys.readouterr().out
    assert "NO" in out
    assert "DE" not in out


def test_reproduce_single_target_to_stdout(capsys):
    assert run(["reproduce", "--target", "table1"]) == 0
    assert capsys.readouterr().out == reproduce("table1").to_csv()


def test_reproduce_all_targets_to_directory(tmp_path):
    out_dir = tmp_path / "golden"
    assert run(["reproduce", "--target", "all", "--out", str(out_dir)]) == 0
    written = sorted(p.name for p in out_dir.iterdir())
    assert written == sorted(f"{t}.csv" for t in REPRODUCE_TARGETS)
    assert (out_dir / "table2.csv").read_text(encoding="utf-8") == reproduce("table2").to_csv()


def test_reproduce_unknown_target_exits_1(capsys):
    assert run(["reproduce", "--target", "table99"]) == 1
    err = capsys.readouterr().err
    assert "table1" in err and "fig13" in err


def test_bad_flag_exits_1(capsys):
    assert run(["transmit", "--nonsense"]) == 1
    assert run(["no-such-command"]) == 1


def test_missing_scenario_file_exits_2(capsys):
    assert run(["lifecycle", "--scenario", "/does/not/exist.json"]) == 2


def test_invalid_scenario_contents_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"samples": 256}), encoding="utf-8")
    assert run(["lifecycle", "--scenario", str(path)]) == 1
    assert "error" in capsys.readouterr().err


def test_unknown_tech_exits_1(capsys):
    assert run(["transmit", "--tech", "wifi", "--samples", "1"]) == 1


def test_help_exits_0(capsys):
    assert run(["--help"]) == 0


def test_output_is_deterministic(capsys, scenario_file):
    assert run(["lifecycle", "--scenario", scenario_file]) == 0
    first = capsys.readouterr().out
    assert run(["lifecycle", "--scenario", scenario_file]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_json_output_mode(capsys):
    assert run(["transmit", "--tech", "ble5", "--samples", "256", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["columns"] == ["metric", "value"]
    assert ["B_T", 17728] in payload["rows"]


def test_out_flag_writes_file(tmp_path):
    target = tmp_path / "report.csv"
    assert run(["transmit", "--tech", "ble5", "--samples", "256", "--out", str(target)]) == 0
    assert "B_T,17728" in target.read_text(encoding="utf-8")


def test_cli_values_match_library_calls(capsys):
    # The CLI must add no arithmetic of its own.
    from ecal.transmission import (
        BLE5,
        PayloadSpec,
        transmission_energy,
        transmitted_bits,
    )

    assert run(["transmit", "--tech", "ble5", "--samples", "256"]) == 0
    rows = dict(line.split(",", 1) for line in _lines(capsys)[1:])
    b_t = transmitted_bits(BLE5, PayloadSpec(64, 256))
    assert int(rows["B_T"]) == b_t.bits
    assert float(rows["E_T_J"]) == transmission_energy(BLE5, b_t).joules
