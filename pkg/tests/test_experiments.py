import json
import os

import numpy as np
import pytest

from dynoprior.concurrency import max_workers, parallel_map
from dynoprior.delay_embed.takens import EmbeddingResult
from dynoprior.errors import EmptySampleError, ParameterError, PlotError
from dynoprior.experiments import ExperimentConfig, run, verify, render_plot, main
from dynoprior.experiments.embed import align
from dynoprior.experiments.puc import PucExperiment
from dynoprior.experiments.runner import MANIFEST
from dynoprior.parameters import Parameters
from dynoprior.parameters.example_parameters import SindyParameters, PucParameters
from dynoprior.rng import make_rng, spawn_seeds
from dynoprior.tables import format_cell, read_table


def read_manifest(directory):
    with open(os.path.join(directory, MANIFEST)) as f:
        return json.load(f)


# ---------------------------------------------------------------------------
# parameters and configs
# ---------------------------------------------------------------------------

def test_parameters_update_existing_keys_only():
    pars = SindyParameters()
    pars.update("threshold", 0.05)
    pars.update("noise", [0.0, 0.5])
    assert pars["threshold"] == 0.05
    assert pars.physical["noise"] == [0.0, 0.5]
    with pytest.raises(ParameterError):
        pars.update("treshold", 0.05)
    with pytest.raises(ParameterError):
        pars["treshold"]


def test_parameters_as_dict_is_a_copy():
    pars = PucParameters()
    snapshot = pars.as_dict()
    snapshot["computational"]["K"] = 1
    assert pars["K"] == 5000
    assert Parameters().as_dict() == {"physical": {}, "computational": {}}


def test_config_defaults():
    config = ExperimentConfig("modes")
    assert config.system == "chen"
    assert config.seed == 0
    assert config.parameters["samples"] == 5000
    assert ExperimentConfig("puc").system is None
    with pytest.raises(ParameterError):
        ExperimentConfig("unknown")


def test_config_from_yaml(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "experiment: sindy\n"
        "system: rossler\n"
        "seed: 3\n"
        "physical:\n"
        "  noise: [0.25, 0.5]\n"
        "computational:\n"
        "  deriv: spectral\n"
        "  threshold: 0.05\n"
    )
    config = ExperimentConfig.from_yaml(path)
    assert (config.experiment, config.system, config.seed) == ("sindy", "rossler", 3)
    assert config.parameters["noise"] == [0.25, 0.5]
    assert config.parameters["deriv"] == "spectral"

    config.to_yaml(tmp_path / "echo.yaml")
    again = ExperimentConfig.from_yaml(tmp_path / "echo.yaml")
    assert again.as_dict() == config.as_dict()


def test_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("experiment: puc\ncomputational:\n  bandwidth: 2\n")
    with pytest.raises(ParameterError):
        ExperimentConfig.from_yaml(path)
    path.write_text("experiment: puc\nsolver: {}\n")
    with pytest.raises(ParameterError):
        ExperimentConfig.from_yaml(path)
    path.write_text("system: lorenz3\n")
    with pytest.raises(ParameterError):
        ExperimentConfig.from_yaml(path)


# ---------------------------------------------------------------------------
# shared utilities
# ---------------------------------------------------------------------------

def test_philox_streams_are_reproducible():
    np.testing.assert_array_equal(make_rng(7).uniform(size = 5), make_rng(7).uniform(size = 5))
    assert isinstance(make_rng(0).bit_generator, np.random.Philox)
    seeds = spawn_seeds(0, 4)
    assert seeds == spawn_seeds(0, 4)
    assert len(set(seeds)) == 4


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("DYNO_THREADS", "1")
    assert max_workers() == 1
    monkeypatch.setenv("DYNO_THREADS", "lots")
    assert max_workers() >= 1
    assert parallel_map(lambda x: x * x, range(10)) == [x * x for x in range(10)]


def test_format_cell():
    assert format_cell(True) == "true"
    assert format_cell(np.bool_(False)) == "false"
    assert format_cell(np.int64(3)) == "3"
    assert format_cell(0.1) == "0.10000000000000001"
    assert format_cell("x*y") == "x*y"


# ---------------------------------------------------------------------------
# plots
# ---------------------------------------------------------------------------

def test_plot_has_one_artist_per_series(tmp_path):
    path = tmp_path / "one.svg"
    render_plot([("a", [0.0, 1.0], [1.0, 2.0])], "line", path, title = "one series")
    svg = path.read_text()
    assert svg.lstrip().startswith("<?xml")
    assert 'id="series-0"' in svg
    assert 'id="series-1"' not in svg


def test_plot_accepts_a_mapping(tmp_path):
    path = tmp_path / "two.svg"
    render_plot({"a": ([0, 1], [1, 2]), "b": ([0, 1], [2, 1])}, "scatter", path)
    svg = path.read_text()
    assert 'id="series-0"' in svg and 'id="series-1"' in svg


def test_plots_are_deterministic(tmp_path):
    series = [("sin", np.linspace(0, 1, 50), np.sin(np.linspace(0, 1, 50)))]
    render_plot(series, "line", tmp_path / "a.svg", logy = False)
    render_plot(series, "line", tmp_path / "b.svg", logy = False)
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()


def test_invalid_plots(tmp_path):
    with pytest.raises(PlotError):
        render_plot([], "line", tmp_path / "empty.svg")
    with pytest.raises(PlotError):
        render_plot([("a", [], [])], "line", tmp_path / "empty.svg")
    with pytest.raises(PlotError):
        render_plot([("a", [0, 1, 2], [0, 1])], "line", tmp_path / "ragged.svg")
    with pytest.raises(PlotError):
        render_plot([("a", [0, 1], [0, 1])], "bars", tmp_path / "style.svg")


# ---------------------------------------------------------------------------
# runs
# ---------------------------------------------------------------------------

def test_puc_run(tmp_path):
    out = tmp_path / "puc"
    assert main(["puc", "--activation", "relu", "--K", "100", "--out", str(out), "-q"]) == 0

    header, rows = read_table(out / "puc_residual.csv")
    assert header == ["x", "residual"]
    assert max(float(r[1]) for r in rows) > 1e3

    manifest = read_manifest(out)
    assert manifest["error"] is None
    assert manifest["config"]["computational"]["activation"] == "relu"
    assert manifest["config"]["computational"]["K"] == 100
    paths = {record["path"] for record in manifest["files"]}
    assert {"puc_residual.csv", "puc_truncation.csv", "puc_residual.svg"} <= paths


def test_manifest_digests_verify(tmp_path):
    config = ExperimentConfig("puc", output_dir = str(tmp_path))
    config.parameters.update("K", 50)
    config.parameters.update("K_values", [10, 50])
    manifest = run(config)
    assert manifest.ok
    assert verify(manifest, str(tmp_path)) == []

    with open(tmp_path / "puc_residual.csv", "a") as f:
        f.write("tampered\n")
    assert verify(manifest, str(tmp_path)) == ["puc_residual.csv"]


def test_sine_puc_fits_a_square_wave(tmp_path):
    assert main(["puc", "--activation", "sine", "--out", str(tmp_path), "-q"]) == 0
    header, rows = read_table(tmp_path / "puc_sine_fit.csv")
    assert header == ["n_terms", "rms"]
    errors = [float(r[1]) for r in rows]
    assert len(errors) == 10
    assert errors[-1] < errors[0]


def sweep_args(out):
    return [
        "sweep", "--omegas", "5", "10", "20", "--seeds", "0", "1", "2", "--out", str(out),
        "--set", "width=8", "--set", "depth=3", "--set", "n_samples=64", "-q"
    ]


def test_sweep_run_is_byte_reproducible(tmp_path):
    assert main(sweep_args(tmp_path / "a")) == 0
    assert main(sweep_args(tmp_path / "b")) == 0
    a = (tmp_path / "a" / "sweep.csv").read_bytes()
    assert a == (tmp_path / "b" / "sweep.csv").read_bytes()
    header, rows = read_table(tmp_path / "a" / "sweep.csv")
    assert header == ["omega", "seed", "lipschitz", "stable_rank"]
    assert len(rows) == 9


def sindy_args(out):
    return [
        "sindy", "--system", "lorenz3", "--deriv", "fd", "--noise", "0", "0.5", "--out", str(out),
        "--set", "t_end=20", "--set", "sample_dt=0.01", "-q"
    ]


def test_sindy_run(tmp_path):
    assert main(sindy_args(tmp_path / "a")) == 0
    assert main(sindy_args(tmp_path / "b")) == 0
    for name in ("sindy_n0_coefficients.csv", "sindy_n0.5_coefficients.csv", "sindy_summary.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    lines = (tmp_path / "a" / "sindy_n0_equations.txt").read_text().splitlines()
    assert [line.split(" = ")[0] for line in lines] == ["dx/dt", "dy/dt", "dz/dt"]

    header, rows = read_table(tmp_path / "a" / "sindy_summary.csv")
    assert header == ["noise", "deriv", "coefficient_error", "nonzero"]
    assert float(rows[0][2]) < 0.1


def test_modes_run(tmp_path):
    args = [
        "modes", "--system", "limit_cycle", "--method", "tdd", "--samples", "2000",
        "--out", str(tmp_path), "--set", "t_end=20", "--set", "integration_dt=0.01", "-q"
    ]
    assert main(args) == 0
    header, rows = read_table(tmp_path / "modes_tdd_spectrum.csv")
    assert header == ["index", "sigma", "sigma_ratio", "dominant"]
    assert rows[0][2] == "1"
    assert read_manifest(tmp_path)["summary"]["tdd_dominant_count"] >= 1


def test_modes_keeps_the_tdd_spectrum_when_nd_is_untrusted(tmp_path):
    args = [
        "modes", "--system", "limit_cycle", "--method", "both", "--samples", "2000",
        "--iterations", "2", "--out", str(tmp_path),
        "--set", "t_end=20", "--set", "integration_dt=0.01", "--set", "width=4", "-q"
    ]
    assert main(args) == 1
    manifest = read_manifest(tmp_path)
    assert manifest["error"].startswith("UntrustedFeaturesError")
    assert manifest["summary"]["tdd_dominant_count"] >= 1
    assert "nd_dominant_count" not in manifest["summary"]
    assert "modes_tdd_spectrum.csv" in {record["path"] for record in manifest["files"]}



def test_forecast_run_with_dmd(tmp_path):
    args = [
        "forecast", "--ntraj", "4", "--nsnap", "50", "--model", "dmd", "--steps", "20",
        "--out", str(tmp_path), "--set", "box_duration=20", "-q"
    ]
    assert main(args) == 0
    assert (tmp_path / "forecast_rollout_dmd.csv").exists()
    assert (tmp_path / "forecast_truth.csv").exists()
    assert not (tmp_path / "forecast_comparison.csv").exists()
    summary = read_manifest(tmp_path)["summary"]
    assert summary["pairs"] == 4 * 49
    assert "dmd_one_step_rms" in summary


def test_failed_run_keeps_a_manifest(tmp_path):
    args = [
        "embed", "--pipeline", "raw", "--spacing", "random", "--out", str(tmp_path),
        "--set", "t_end=20", "--set", "samples=1000", "-q"
    ]
    assert main(args) == 1
    manifest = read_manifest(tmp_path)
    assert manifest["error"].startswith("UnsupportedSpacingError")


def test_raw_embedding_run(tmp_path):
    args = [
        "embed", "--pipeline", "raw", "--out", str(tmp_path),
        "--set", "t_end=40", "--set", "samples=2000", "-q"
    ]
    assert main(args) == 0
    header, rows = read_table(tmp_path / "embed_raw.csv")
    assert header == ["t", "e1", "e2"]
    summary = read_manifest(tmp_path)["summary"]
    assert summary["procrustes_correlation"] == pytest.approx(1.0)
    assert summary["closed_curve_gap"] < 0.05


def test_crashed_run_records_the_error(tmp_path, monkeypatch):
    def crash(self):
        raise RuntimeError("boom")

    monkeypatch.setattr(PucExperiment, "execute", crash)
    with pytest.raises(RuntimeError):
        run(ExperimentConfig("puc", output_dir = str(tmp_path)))
    assert read_manifest(tmp_path)["error"] == "RuntimeError: boom"


def test_align_interpolates_the_reference():
    t_ref = np.arange(0.0, 10.0, 0.1)
    reference = EmbeddingResult(np.vstack([np.sin(t_ref), np.cos(t_ref)]), 2, t_ref)
    t = np.sort(np.random.default_rng(0).uniform(-1.0, 11.0, 60))
    other = EmbeddingResult(np.vstack([np.sin(t), np.cos(t)]), 2, t)

    a, b = align(reference, other)
    inside = (t >= 0.0) & (t <= t_ref[-1])
    assert a.shape == b.shape == (2, np.count_nonzero(inside))
    np.testing.assert_allclose(a, b, atol = 2e-3)

    disjoint = EmbeddingResult(np.zeros((2, 3)), 2, np.array([20.0, 21.0, 22.0]))
    with pytest.raises(EmptySampleError):
        align(reference, disjoint)


@pytest.mark.parametrize("seed", ["0", "1", "2", "3"])
def test_random_spacing_surrogate_run(tmp_path, seed):
    args = [
        "embed", "--pipeline", "surrogate", "--spacing", "random", "--seed", seed,
        "--out", str(tmp_path), "--set", "t_end=20", "--set", "samples=1000",
        "--set", "iterations=5", "--set", "width=8", "-q"
    ]
    assert main(args) == 0
    manifest = read_manifest(tmp_path)
    assert manifest["error"] is None
    assert manifest["summary"]["extrapolated"] is False
    assert 0.0 <= manifest["summary"]["procrustes_correlation"] <= 1.0


def vanderpol_embedding(out, *flags):
    assert main(["embed", "--system", "vanderpol", "--out", str(out), "-q", *flags]) == 0
    return read_manifest(out)["summary"]


@pytest.mark.slow
def test_surrogate_embedding_beats_raw_under_noise(tmp_path):
    raw = vanderpol_embedding(tmp_path / "raw", "--pipeline", "raw", "--noise", "0.1")
    net = vanderpol_embedding(tmp_path / "net", "--pipeline", "surrogate", "--noise", "0.1")
    assert net["procrustes_correlation"] >= 0.9
    assert net["procrustes_correlation"] > raw["procrustes_correlation"]


@pytest.mark.slow
def test_sparse_surrogate_embedding_is_a_closed_curve(tmp_path):
    summary = vanderpol_embedding(
        tmp_path, "--pipeline", "surrogate", "--spacing", "sparse", "--set", "surrogate_window=0.2"
    )
    assert summary["closed_curve_gap"] < 0.05


@pytest.mark.slow
def test_random_timed_surrogate_tracks_the_signal(tmp_path):
    summary = vanderpol_embedding(tmp_path, "--pipeline", "surrogate", "--spacing", "random")
    assert summary["surrogate_relative_rms"] < 0.05
    assert not summary["extrapolated"]



def test_config_file_run(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "experiment: puc\n"
        f"output_dir: {tmp_path / 'out'}\n"
        "computational:\n"
        "  activation: gaussian\n"
        "  K: 100\n"
        "  K_values: [10, 100]\n"
    )
    assert main(["run", "--config", str(path), "--seed", "4", "-q"]) == 0
    manifest = read_manifest(tmp_path / "out")
    assert manifest["config"]["seed"] == 4
    header, rows = read_table(tmp_path / "out" / "puc_truncation.csv")
    assert [r[0] for r in rows] == ["10", "100"]


def test_bad_overrides_exit_with_usage_error(tmp_path):
    assert main(["puc", "--set", "bandwidth=3", "--out", str(tmp_path), "-q"]) == 2
    assert main(["run", "--config", str(tmp_path / "missing.yaml"), "-q"]) == 2


def test_help_lists_flags(capsys):
    with pytest.raises(SystemExit) as err:
        main(["sindy", "--help"])
    assert err.value.code == 0
    text = capsys.readouterr().out
    for flag in ("--noise", "--deriv", "--dmax", "--threshold", "--seed", "--out", "--system"):
        assert flag in text
