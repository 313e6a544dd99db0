import numpy as np
import pytest
from scipy.signal import sawtooth, square
from scipy.stats import spearmanr

from dynoprior.basis_analysis import (
    partition_residual, riesz_ratio, sine_periodic_fit, write_residual_csv,
    spectral_norm, estimate_lipschitz, lipschitz_upper_bound, stable_rank,
    omega_sweep, write_sweep_csv, nyquist_sample_count, nyquist_ratio
)
from dynoprior.coordnet import Network, init, make_activation
from dynoprior.errors import UndefinedRankError
from dynoprior.tables import read_table


# ---------------------------------------------------------------------------
# partition of unity
# ---------------------------------------------------------------------------

def test_sinc_partition_of_unity():
    assert partition_residual("sinc", 500).max_residual < 1e-2
    assert partition_residual("sinc", 5000).max_residual < 1e-3


def test_sinc_residual_shrinks_with_truncation():
    means = [np.mean(partition_residual("sinc", K).residuals) for K in (100, 1000, 5000)]
    assert means[0] >= means[1] >= means[2]


def test_relu_partial_sums_grow():
    residuals = [partition_residual("relu", K).max_residual for K in (100, 200, 400)]
    assert residuals[0] > 1e3
    assert residuals[0] < residuals[1] < residuals[2]


def test_gaussian_normalised_residual():
    assert partition_residual(make_activation("gaussian", 1.0), 100).max_residual < 1e-2


def test_sine_has_no_generator():
    with pytest.raises(ValueError):
        partition_residual("sine", 10)


def test_residual_grid_and_csv(tmp_path):
    result = partition_residual("sinc", 50, grid_points = 16)
    np.testing.assert_array_equal(result.grid, np.arange(16) / 16)
    assert np.all(result.residuals >= 0)
    # the sum is exactly one at the integers
    assert result.residuals[0] < 1e-12

    path = tmp_path / "residual.csv"
    write_residual_csv(path, result)
    header, rows = read_table(path)
    assert header == ["x", "residual"]
    assert len(rows) == 16


def test_riesz_ratio_within_frame_bounds():
    assert 0.5 <= riesz_ratio(200, seed = 0) <= 2.0


def test_sine_fit_reproduces_signals_in_the_span():
    x = np.arange(512) / 512
    signal = np.sin(2 * np.pi * 3 * x) + 0.5 * np.cos(2 * np.pi * x) - 0.2
    assert sine_periodic_fit(signal, 3) < 1e-10


def test_sine_fit_error_does_not_increase():
    x = np.arange(1024) / 1024
    errors = [sine_periodic_fit(square(2 * np.pi * x), n) for n in range(1, 11)]
    assert all(a >= b - 1e-12 for a, b in zip(errors, errors[1:]))
    assert errors[-1] < errors[0]


def test_sawtooth_tail_bound():
    N, n_terms = 4096, 10
    x = np.arange(N) / N
    error = sine_periodic_fit(sawtooth(2 * np.pi * x), n_terms)
    # sawtooth(2 pi x) = -(2 / pi) sum_n sin(2 pi n x) / n, so the RMS of the tail is
    # sqrt(sum_{n > N} (2 / (pi n))^2 / 2)
    n = np.arange(n_terms + 1, 10**6)
    tail = np.sqrt(np.sum((2 / (np.pi * n))**2) / 2)
    assert tail / 2 <= error <= 2 * tail


# ---------------------------------------------------------------------------
# lipschitz estimates
# ---------------------------------------------------------------------------

def orthogonal(n, seed):
    q, _ = np.linalg.qr(np.random.default_rng(seed).standard_normal((n, n)))
    return q


def test_spectral_norm_by_power_iteration():
    J = orthogonal(3, 0)[:, :3] @ np.diag([3.0, 1.0, 0.5]) @ orthogonal(4, 1)[:3, :]
    assert spectral_norm(J) == pytest.approx(3.0, rel = 1e-8)
    assert spectral_norm(np.zeros((2, 3))) == 0.0


def test_affine_network_lipschitz_is_the_weight_norm():
    W = orthogonal(3, 2) @ np.diag([2.5, 1.0, 0.2]) @ orthogonal(4, 3)[:3, :]
    net = Network([W], [np.zeros(3)], "sinc")
    samples = np.random.default_rng(0).uniform(-1, 1, size = (4, 10))
    assert estimate_lipschitz(net, samples, layer_k = 1) == pytest.approx(2.5, rel = 1e-8)
    assert lipschitz_upper_bound(net, 1) == pytest.approx(2.5, rel = 1e-12)


def test_zero_weights_give_zero_lipschitz():
    net = Network([np.zeros((5, 1)), np.zeros((1, 5))], [np.zeros(5), np.zeros(1)], "sinc")
    assert estimate_lipschitz(net, np.linspace(-1, 1, 11)[None, :], layer_k = 2) == 0.0


def test_estimate_grows_with_omega():
    base = init([1, 32, 32, 1], make_activation("sinc", 10.0), seed = 0)
    wide = Network(base.weights, base.biases, make_activation("sinc", 20.0))
    samples = np.linspace(-1, 1, 2001)[None, :]
    assert estimate_lipschitz(wide, samples, layer_k = 1) > estimate_lipschitz(base, samples, layer_k = 1)


@pytest.mark.parametrize("kind, omega", [("sinc", 10.0), ("gaussian", 0.5), ("sine", 5.0), ("relu", None)])
def test_upper_bound_exceeds_estimate(kind, omega):
    net = init([1, 16, 16, 16, 1], make_activation(kind, omega), seed = 3)
    samples = np.linspace(-1, 1, 257)[None, :]
    for k in range(1, net.depth + 1):
        assert lipschitz_upper_bound(net, k) >= estimate_lipschitz(net, samples, layer_k = k)


def test_layer_out_of_range():
    net = init([1, 4, 1], "sinc")
    with pytest.raises(ValueError):
        estimate_lipschitz(net, np.zeros((1, 3)), layer_k = 3)


# ---------------------------------------------------------------------------
# stable rank
# ---------------------------------------------------------------------------

def test_stable_rank_of_rank_one():
    F = np.outer(np.arange(1.0, 8.0), [1.0, -2.0, 0.5])
    assert stable_rank(F) == pytest.approx(1.0, abs = 1e-12)


def test_stable_rank_of_orthogonal_matrix():
    assert stable_rank(orthogonal(6, 4)) == pytest.approx(6.0, abs = 1e-10)


def test_stable_rank_matches_singular_values(rng):
    F = rng.standard_normal((100, 20))
    s = np.linalg.svd(F, compute_uv = False)
    value = stable_rank(F)
    assert value == pytest.approx(np.sum(s**2) / s[0]**2, rel = 0.05)
    assert 1 <= value <= 20


def test_stable_rank_bounded_by_rank(rng):
    F = rng.standard_normal((30, 3)) @ rng.standard_normal((3, 10))
    assert 1 <= stable_rank(F) <= 3 + 1e-9


def test_stable_rank_of_zero_matrix():
    with pytest.raises(UndefinedRankError):
        stable_rank(np.zeros((4, 3)))


# ---------------------------------------------------------------------------
# omega sweeps
# ---------------------------------------------------------------------------

def test_repeated_omegas_give_constant_medians(tmp_path):
    samples = np.linspace(-1, 1, 64)[None, :]
    result = omega_sweep([1, 8, 8, 1], "sinc", [10, 10, 10], samples, [0, 1, 2])
    assert np.all(result.lipschitz_estimates == result.lipschitz_estimates[0])
    assert np.all(result.stable_ranks == result.stable_ranks[0])
    assert len(result.records) == 9

    path = tmp_path / "sweep.csv"
    write_sweep_csv(path, result)
    header, rows = read_table(path)
    assert header == ["omega", "seed", "lipschitz", "stable_rank"]
    assert [row[1] for row in rows[:3]] == ["0", "1", "2"]


def test_sweep_needs_three_points():
    samples = np.linspace(-1, 1, 8)[None, :]
    with pytest.raises(ValueError):
        omega_sweep([1, 4, 4, 1], "sinc", [5, 10], samples, [0, 1, 2])
    with pytest.raises(ValueError):
        omega_sweep([1, 4, 4, 1], "sinc", [5, 10, 20], samples, [0, 1])


def test_sweep_is_independent_of_thread_count(monkeypatch):
    samples = np.linspace(-1, 1, 32)[None, :]
    args = ([1, 8, 8, 1], "gaussian", [1.0, 0.5, 0.25], samples, [0, 1, 2])
    monkeypatch.setenv("DYNO_THREADS", "1")
    serial = omega_sweep(*args)
    monkeypatch.setenv("DYNO_THREADS", "4")
    threaded = omega_sweep(*args)
    np.testing.assert_array_equal(serial.lipschitz_estimates, threaded.lipschitz_estimates)
    np.testing.assert_array_equal(serial.stable_ranks, threaded.stable_ranks)


@pytest.mark.slow
def test_sinc_sweep_is_monotone():
    samples = np.linspace(-1, 1, 512)[None, :]
    omegas = [5, 10, 20, 40]
    result = omega_sweep([1, 256, 256, 256, 1], "sinc", omegas, samples, range(5))
    assert spearmanr(omegas, result.lipschitz_estimates)[0] == pytest.approx(1.0)
    assert spearmanr(omegas, result.stable_ranks)[0] == pytest.approx(1.0)
    assert np.all(np.diff(result.lipschitz_estimates) > 0)
    assert np.all(np.diff(result.stable_ranks) > 0)


@pytest.mark.slow
def test_gaussian_sweep_is_monotone():
    samples = np.linspace(-1, 1, 512)[None, :]
    result = omega_sweep([1, 256, 256, 256, 1], "gaussian", [2, 1, 0.5, 0.25], samples, range(5))
    assert np.all(np.diff(result.lipschitz_estimates) > 0)


# ---------------------------------------------------------------------------
# nyquist arithmetic
# ---------------------------------------------------------------------------

def test_nyquist_sample_count():
    assert 4.39e12 <= nyquist_sample_count(8, 14) <= 4.40e12
    assert nyquist_sample_count(8, 1) == 8
    assert nyquist_sample_count(2.5, 2) == 6.25
    with pytest.raises(ValueError):
        nyquist_sample_count(8, 0)


def test_nyquist_sample_count_saturates_to_inf():
    assert nyquist_sample_count(1e10, 40) == np.inf
    assert nyquist_ratio(1e6, 1e10, 40) == 0.0


def test_nyquist_ratio():
    # 100 trajectories of 800 snapshots against the 14-dimensional Nyquist count
    assert nyquist_ratio(100 * 800, 8, 14) == pytest.approx(1.81e-8, rel = 0.01)
    assert nyquist_ratio(800000, 8, 14) == 800000 / 8**14
