"""Command-line surface: evaluate, sweep, polar and site-rank"""

import re

import pandas as pd
import pytest

from windrotor.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from windrotor.services.config_loader import design_point_for_chord, load_run_config
from windrotor.services.rotor_model import evaluate_rotor
from tests.conftest import DHOFAR_STATIONS, DHOFAR_TIP_KW_PER_M, integrate_station_csv, write_config


@pytest.fixture(autouse=True)
def quiet_logs(monkeypatch):
    monkeypatch.setenv("WINDROTOR_LOG", "CRITICAL")


def summary_value(text: str, label: str) -> float:
    match = re.search(rf"{label} ([0-9.eE+-]+)", text)
    assert match, f"{label} missing from output:\n{text}"
    return float(match.group(1))


# ============================================================================
# evaluate
# ============================================================================

def test_evaluate_dhofar_matches_reference_table(tmp_path, data_dir, capsys):
    out = tmp_path / "stations.csv"
    assert main(["evaluate", "--config", str(data_dir / "dhofar.conf"), "--out", str(out)]) == EXIT_OK

    table = pd.read_csv(out, dtype={"station": str})
    assert list(table.columns) == ["station", "radius_m", "blade_angle_deg", "power_per_span_kW_per_m"]
    assert list(table["station"]) == ["hub"] + [str(n) for n in range(1, 17)] + ["tip"]
    assert pd.isna(table["blade_angle_deg"].iloc[0]) and pd.isna(table["blade_angle_deg"].iloc[-1])
    assert table["power_per_span_kW_per_m"].iloc[0] == 0.0
    assert table["radius_m"].iloc[0] == 2.0 and table["radius_m"].iloc[-1] == 40.0

    for (blade_angle, power_kw), (_, row) in zip(DHOFAR_STATIONS, table.iloc[1:-1].iterrows()):
        assert row["blade_angle_deg"] == pytest.approx(blade_angle, abs=0.3)
        assert row["power_per_span_kW_per_m"] == pytest.approx(power_kw, rel=5e-3)
    assert table["power_per_span_kW_per_m"].iloc[-1] == pytest.approx(DHOFAR_TIP_KW_PER_M, rel=5e-3)

    output = capsys.readouterr().out
    assert summary_value(output, "rotor power") == pytest.approx(2.37, rel=0.01)
    assert summary_value(output, "electric power") >= 2.0
    assert summary_value(output, "Reynolds number") == pytest.approx(1.4e6)
    assert summary_value(output, "tip speed") == pytest.approx(62.83, abs=0.01)


def test_evaluate_csv_reintegrates_to_rotor_power(tmp_path, data_dir):
    out = tmp_path / "stations.csv"
    config_path = data_dir / "dhofar.conf"
    assert main(["evaluate", "--config", str(config_path), "--out", str(out)]) == EXIT_OK

    config = load_run_config(config_path)
    flow = config.flow.to_flow()
    geometry = config.rotor.to_geometry()
    solution = evaluate_rotor(flow, geometry, design_point_for_chord(config, flow, geometry.chord))
    assert integrate_station_csv(out, geometry.blade_count) == pytest.approx(solution.rotor_power, rel=1e-9)


def test_evaluate_output_is_byte_identical(tmp_path, data_dir):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    config = str(data_dir / "dhofar.conf")
    assert main(["evaluate", "--config", config, "--out", str(first)]) == EXIT_OK
    assert main(["evaluate", "--config", config, "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_evaluate_minimal_grid(tmp_path):
    config = write_config(tmp_path / "run.conf", run__station_count=2)
    out = tmp_path / "stations.csv"
    assert main(["evaluate", "--config", str(config), "--out", str(out)]) == EXIT_OK
    assert len(pd.read_csv(out)) == 4


def test_evaluate_rejects_negative_wind_speed(tmp_path, capsys):
    config = write_config(tmp_path / "run.conf", flow__wind_speed=-6.0)
    assert main(["evaluate", "--config", str(config)]) == EXIT_USAGE
    assert "flow.wind_speed" in capsys.readouterr().err


def test_evaluate_rejects_unknown_key(tmp_path, capsys):
    config = write_config(tmp_path / "run.conf", rotor__colour="red")
    assert main(["evaluate", "--config", str(config)]) == EXIT_USAGE
    assert "rotor.colour" in capsys.readouterr().err


def test_evaluate_rejects_partial_design_point(tmp_path, capsys):
    config = write_config(tmp_path / "run.conf", design__incidence=None)
    assert main(["evaluate", "--config", str(config)]) == EXIT_USAGE
    assert "design" in capsys.readouterr().err


def test_evaluate_needs_rotor_section(data_dir, capsys):
    assert main(["evaluate", "--config", str(data_dir / "dhofar_sweep.conf")]) == EXIT_USAGE
    assert "rotor" in capsys.readouterr().err


def test_evaluate_missing_config(tmp_path):
    assert main(["evaluate", "--config", str(tmp_path / "absent.conf")]) == EXIT_USAGE


def test_evaluate_rejects_polar_settings_on_fixed_design(tmp_path, capsys):
    config = write_config(tmp_path / "run.conf", design__stall_margin=0.9, design__operating_reynolds=2e6)
    assert main(["evaluate", "--config", str(config)]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "operating_reynolds" in err and "stall_margin" in err


def test_evaluate_rejects_non_finite_value(tmp_path, capsys):
    config = write_config(tmp_path / "run.conf", rotor__chord="inf")
    assert main(["evaluate", "--config", str(config)]) == EXIT_USAGE
    assert "rotor.chord" in capsys.readouterr().err


def test_evaluate_unwritable_output_is_reported(tmp_path, data_dir, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory\n")
    out = blocker / "stations.csv"
    assert main(["evaluate", "--config", str(data_dir / "dhofar.conf"), "--out", str(out)]) == EXIT_FAILURE
    assert "blocker" in capsys.readouterr().err


def test_evaluate_prints_csv_without_out(data_dir, capsys):
    assert main(["evaluate", "--config", str(data_dir / "dhofar.conf")]) == EXIT_OK
    output = capsys.readouterr().out
    assert output.startswith("station,radius_m,blade_angle_deg,power_per_span_kW_per_m\nhub,2,,0\n")
    assert "rotor power" in output


def test_evaluate_emits_series(tmp_path, data_dir):
    series_dir = tmp_path / "series"
    out = tmp_path / "stations.csv"
    args = ["evaluate", "--config", str(data_dir / "dhofar.conf"), "--out", str(out), "--emit-series", str(series_dir)]
    assert main(args) == EXIT_OK

    relative = pd.read_csv(series_dir / "relative_angle.csv")
    blade = pd.read_csv(series_dir / "blade_angle.csv")
    power = pd.read_csv(series_dir / "power_per_span.csv")
    share = pd.read_csv(series_dir / "power_share.csv")
    assert list(relative.columns) == ["radius_m", "relative_angle_deg"]
    assert len(relative) == len(blade) == 16
    assert (blade["blade_angle_deg"] - relative["relative_angle_deg"]).round(9).eq(12.5).all()
    assert len(power) == 18 and power["power_per_span_kW_per_m"].iloc[0] == 0.0
    assert share["cumulative_power_fraction"].iloc[-1] == pytest.approx(1.0)


def test_evaluate_with_polar_design_point(data_dir, capsys):
    assert main(["evaluate", "--config", str(data_dir / "dhofar_polar.conf")]) == EXIT_OK
    output = capsys.readouterr().out
    assert "derived-from-polar" in output
    assert summary_value(output, "rotor power") == pytest.approx(2.37, rel=0.01)


# ============================================================================
# sweep
# ============================================================================

def sweep_config(path, **space):
    values = {
        "space.diameter_min": 80, "space.diameter_max": 85, "space.diameter_step": 5,
        "space.rpm_min": 14, "space.rpm_max": 16, "space.rpm_step": 1,
        "space.chord_min": 3.0, "space.chord_max": 4.0, "space.chord_step": 0.5,
    }
    values.update({k.replace("__", "."): v for k, v in space.items()})
    base = {
        "flow.wind_speed": 6.0,
        "design.lift_coefficient": 1.3,
        "design.drag_coefficient": 0.018,
        "design.incidence": 12.5,
    }
    path.write_text("".join(f"{k} = {v}\n" for k, v in {**base, **values}.items()))
    return path


def test_sweep_writes_ranked_candidates(tmp_path, capsys):
    config = sweep_config(tmp_path / "sweep.conf")
    out = tmp_path / "candidates.csv"
    assert main(["sweep", "--config", str(config), "--out", str(out)]) == EXIT_OK

    table = pd.read_csv(out)
    assert list(table.columns) == [
        "rank", "diameter_m", "rpm", "chord_m", "rotor_power_MW",
        "electric_power_MW", "tip_speed_m_per_s", "feasible",
    ]
    assert len(table) == 2 * 3 * 3
    assert list(table["rank"]) == list(range(1, 19))
    dhofar = table[(table["diameter_m"] == 80) & (table["rpm"] == 15) & (table["chord_m"] == 3.5)]
    assert bool(dhofar["feasible"].iloc[0])
    assert "best feasible" in capsys.readouterr().out


def test_sweep_zero_target_all_feasible(tmp_path):
    config = sweep_config(tmp_path / "sweep.conf", constraints__target_electric_power=0)
    out = tmp_path / "candidates.csv"
    assert main(["sweep", "--config", str(config), "--out", str(out), "--jobs", "2"]) == EXIT_OK
    assert pd.read_csv(out)["feasible"].all()


def test_sweep_single_point(tmp_path):
    config = sweep_config(
        tmp_path / "sweep.conf",
        space__diameter_max=80, space__rpm_min=15, space__rpm_max=15,
        space__chord_min=3.5, space__chord_max=3.5,
    )
    out = tmp_path / "candidates.csv"
    assert main(["sweep", "--config", str(config), "--out", str(out)]) == EXIT_OK
    assert len(pd.read_csv(out)) == 1


def test_sweep_reports_no_feasible_candidate(tmp_path, capsys):
    config = sweep_config(tmp_path / "sweep.conf", constraints__target_electric_power=5e7)
    out = tmp_path / "candidates.csv"
    assert main(["sweep", "--config", str(config), "--out", str(out)]) == EXIT_OK
    assert "no feasible candidate" in capsys.readouterr().out
    assert not pd.read_csv(out)["feasible"].any()


def test_sweep_needs_output_path(tmp_path):
    config = sweep_config(tmp_path / "sweep.conf")
    assert main(["sweep", "--config", str(config)]) == EXIT_USAGE


def test_sweep_rejects_inverted_range(tmp_path, capsys):
    config = sweep_config(tmp_path / "sweep.conf", space__rpm_min=20)
    assert main(["sweep", "--config", str(config), "--out", str(tmp_path / "c.csv")]) == EXIT_USAGE


def test_sweep_writes_points_without_power(tmp_path, capsys):
    config = sweep_config(
        tmp_path / "sweep.conf",
        design__drag_coefficient=0.5,
        constraints__target_electric_power=0,
        space__diameter_min=10, space__diameter_max=80, space__diameter_step=70,
        space__rpm_min=15, space__rpm_max=15,
        space__chord_min=3.5, space__chord_max=3.5,
    )
    out = tmp_path / "candidates.csv"
    assert main(["sweep", "--config", str(config), "--out", str(out)]) == EXIT_OK

    table = pd.read_csv(out)
    assert list(table["diameter_m"]) == [10, 80]
    assert list(table["feasible"]) == [True, False]
    assert table["rotor_power_MW"].iloc[0] > 0
    assert pd.isna(table["rotor_power_MW"].iloc[1]) and pd.isna(table["electric_power_MW"].iloc[1])
    assert out.read_text().splitlines()[2].startswith("2,80,15,3.5,,,")
    assert "best feasible: diameter 10 m" in capsys.readouterr().out


def test_sweep_with_polar_design(tmp_path, data_dir):
    config = sweep_config(tmp_path / "sweep.conf")
    text = config.read_text()
    text = re.sub(r"design\.(lift_coefficient|drag_coefficient|incidence) = .*\n", "", text)
    config.write_text(text + f"design.polar_file = {data_dir / 'naca0012_synthetic.csv'}\n")
    out = tmp_path / "candidates.csv"
    assert main(["sweep", "--config", str(config), "--out", str(out)]) == EXIT_OK
    assert len(pd.read_csv(out)) == 18


# ============================================================================
# polar
# ============================================================================

def test_polar_bundled_design_point(data_dir, capsys):
    assert main(["polar", "--file", str(data_dir / "naca0012_synthetic.csv"), "--re", "1.4e6"]) == EXIT_OK
    output = capsys.readouterr().out
    assert summary_value(output, "selected curve Re") == 1e6
    assert summary_value(output, "design CL") == 1.3
    assert summary_value(output, "design incidence") == 12.5
    assert summary_value(output, "design CD") == 0.018
    assert "stall CL 1.529 at 14.5 deg" in output


def test_polar_identity_margin(data_dir, capsys):
    args = ["polar", "--file", str(data_dir / "naca0012_synthetic.csv"), "--re", "1.4e6", "--margin", "1.0"]
    assert main(args) == EXIT_OK
    output = capsys.readouterr().out
    assert summary_value(output, "design CL") == summary_value(output, "stall CL")


def test_polar_margin_above_stall(data_dir, capsys):
    args = ["polar", "--file", str(data_dir / "naca0012_synthetic.csv"), "--re", "1.4e6", "--margin", "1.2"]
    assert main(args) == EXIT_FAILURE
    assert "stall" in capsys.readouterr().err


def test_polar_malformed_file_names_line(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("kind,reynolds,incidence_deg,cl,cd\nlift,1e6,0,0,\nlift,1e6,5,oops,\n")
    assert main(["polar", "--file", str(path), "--re", "1e6"]) == EXIT_USAGE
    assert ":3:" in capsys.readouterr().err


# ============================================================================
# site-rank
# ============================================================================

def test_site_rank_bundled(data_dir, capsys):
    assert main(["site-rank", "--file", str(data_dir / "oman_sites.csv")]) == EXIT_OK
    output = capsys.readouterr().out
    lines = output.strip().splitlines()
    assert lines[0].startswith("rank,name,")
    assert lines[1].startswith("1,Thumrait,")
    assert "131.76" in lines[1]


def test_site_rank_to_file(tmp_path, capsys):
    sites = tmp_path / "sites.csv"
    sites.write_text("name,mean_wind_speed,air_density\nLow,6.0,1.0\nThumrait,6.0,1.22\nCalm,0,\n")
    out = tmp_path / "ranked.csv"
    assert main(["site-rank", "--file", str(sites), "--out", str(out)]) == EXIT_OK
    ranked = pd.read_csv(out)
    assert list(ranked["name"]) == ["Thumrait", "Low", "Calm"]
    assert ranked["power_density_W_per_m2"].iloc[0] == pytest.approx(131.76, rel=1e-9)
    assert ranked["power_density_W_per_m2"].iloc[-1] == 0.0


def test_site_rank_malformed_row(tmp_path, capsys):
    sites = tmp_path / "sites.csv"
    sites.write_text("name,mean_wind_speed\nA,5\nB,-2\n")
    assert main(["site-rank", "--file", str(sites)]) == EXIT_USAGE
    assert ":3:" in capsys.readouterr().err


def test_unknown_command_exits_with_usage():
    with pytest.raises(SystemExit) as excinfo:
        main(["launch"])
    assert excinfo.value.code == 2
