import numpy as np
import pytest
import sympy as sp

from dynoprior.errors import CatalogError, DivergenceError, EmptySampleError, MissingParameterError
from dynoprior.sindy.library import CandidateLibrary
from dynoprior.systems import (
    catalog, CustomSystem, exponential_decay, linear_system, integrate, integrate_batch,
    burn_in, attractor_box, time_grid, sample, Uniform, Random, Decimated, SampleSet,
    Trajectory, true_coefficients, io, SYSTEMS, Lorenz14
)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def test_catalog_published_parameters():
    assert catalog("lorenz3").params == pytest.approx({"sigma": 10, "rho": 28, "beta": 8 / 3})
    assert catalog("vanderpol").params == {"mu": 1.0}
    assert catalog("chen").params == pytest.approx({"alpha": 5, "beta": -10, "delta": -0.38})
    assert catalog("rossler").params == pytest.approx({"a": 0.2, "b": 0.2, "c": 5.7})
    assert catalog("duffing").params == pytest.approx({"delta": 0.1, "alpha": -1, "beta": 1})
    assert catalog("limit_cycle").params == {}


def test_lorenz14_dimension_and_forcing():
    spec = catalog("lorenz14")
    assert spec.dim == 14
    assert spec.params["R"] == pytest.approx(6.75 * 45.92)
    assert spec.params["a"] == pytest.approx(1 / np.sqrt(2))
    assert spec.params["sigma"] == 10.0

    # overriding r alone rescales R
    assert catalog("lorenz14", {"r": 10.0}).params["R"] == pytest.approx(67.5)


def test_unknown_system_lists_valid_names():
    with pytest.raises(CatalogError) as err:
        catalog("lorenz96")
    for name in SYSTEMS:
        assert name in str(err.value)


def test_missing_parameter_is_an_error():
    x, k = sp.symbols("x k")
    system = CustomSystem("decay", [x], [-k * x])
    with pytest.raises(MissingParameterError):
        system.build()


def test_parameter_override():
    spec = catalog("lorenz3", {"rho": 14.0})
    assert spec.params["rho"] == 14.0
    assert spec.rhs(np.array([1.0, 0.0, 0.0]))[1] == pytest.approx(14.0)


def test_rhs_is_vectorised():
    spec = catalog("lorenz3")
    X = np.arange(15, dtype = float).reshape(3, 5)
    out = spec.rhs(X)
    assert out.shape == (3, 5)
    for j in range(5):
        np.testing.assert_allclose(out[:, j], spec.rhs(X[:, j]))


def test_constant_components_broadcast():
    spec = linear_system(np.zeros((2, 2)))
    np.testing.assert_array_equal(spec.rhs(np.ones((2, 4))), np.zeros((2, 4)))


def test_textbook_and_published_lorenz_differ_in_sign():
    x = np.array([1.0, 2.0, 3.0])
    canonical = catalog("lorenz3").rhs(x)
    published = catalog("lorenz3", canonical_lorenz = False).rhs(x)
    assert canonical[2] == pytest.approx(2 - 8)
    assert published[2] == pytest.approx(-2 - 8)


# ---------------------------------------------------------------------------
# integration
# ---------------------------------------------------------------------------

def test_exponential_decay():
    traj = integrate(exponential_decay(), [1.0], 0.0, 1.0, 1e-3)
    assert len(traj) == 1001
    assert abs(traj.states[0, -1] - np.exp(-1)) < 1e-6


def test_zero_length_interval_gives_one_column():
    traj = integrate(catalog("lorenz3"), [1.0, 2.0, 3.0], 2.0, 2.0, 0.1)
    assert traj.states.shape == (3, 1)
    np.testing.assert_array_equal(traj.states[:, 0], [1.0, 2.0, 3.0])
    assert traj.times[0] == 2.0


def test_rk4_is_fourth_order():
    spec = exponential_decay()
    errors = []
    for dt in (0.1, 0.05):
        traj = integrate(spec, [1.0], 0.0, 1.0, dt)
        errors.append(abs(traj.states[0, -1] - np.exp(-1)))
    assert 12 <= errors[0] / errors[1] <= 20


def test_integration_is_deterministic():
    spec = catalog("rossler")
    a = integrate(spec, [1.0, 1.0, 1.0], 0.0, 5.0, 0.01)
    b = integrate(spec, [1.0, 1.0, 1.0], 0.0, 5.0, 0.01)
    np.testing.assert_array_equal(a.states, b.states)


def test_lorenz_stays_bounded():
    traj = integrate(catalog("lorenz3"), [1.0, 1.0, 1.0], 0.0, 100.0, 0.01)
    assert np.all(np.isfinite(traj.states))
    assert np.max(np.abs(traj.states)) < 100


@pytest.mark.parametrize("name", sorted(SYSTEMS))
def test_catalog_systems_integrate_ten_thousand_steps(name):
    spec = catalog(name)
    traj = integrate(spec, np.ones(spec.dim), 0.0, 100.0, 0.01)
    assert len(traj) == 10001
    assert np.all(np.isfinite(traj.states))
    assert np.max(np.abs(traj.states)) < 1e4


def test_lorenz14_integrates_from_a_small_start():
    spec = catalog("lorenz14")
    traj = integrate(spec, 0.1 * np.ones(spec.dim), 0.0, 100.0, 0.01)
    assert np.all(np.isfinite(traj.states))
    assert np.max(np.abs(traj.states)) < 1e4


def cubic_terms(expr, variables):
    poly = sp.Poly(sp.expand(expr), *variables)
    return [monom for monom, coeff in poly.terms() if sum(monom) == 3]


def test_lorenz14_quadratic_terms_conserve_energy():
    system = Lorenz14()
    psi, theta = system.state[:6], system.state[6:]
    stream = sum(w * s * e for w, s, e in zip(Lorenz14.STREAM_WEIGHTS, psi, system.f[:6]))
    heat = sum(w * s * e for w, s, e in zip(Lorenz14.TEMPERATURE_WEIGHTS, theta, system.f[6:]))
    assert cubic_terms(stream, system.state) == []
    assert cubic_terms(heat, system.state) == []


def test_divergence_reports_the_step():
    x = sp.Symbol("x")
    blowup = CustomSystem("blowup", [x], [x**2]).build()
    with pytest.raises(DivergenceError) as err:
        integrate(blowup, [2.0], 0.0, 1.0, 0.01)
    assert 0 < err.value.step <= 100


def test_batch_integration_flags_diverging_columns():
    x = sp.Symbol("x")
    blowup = CustomSystem("blowup", [x], [x**2]).build()
    t, states, alive = integrate_batch(blowup, np.array([[0.5, 2.0]]), 0.0, 1.0, 0.01)
    assert states.shape == (1, 2, t.shape[0])
    np.testing.assert_array_equal(alive, [True, False])
    assert states[0, 0, -1] == pytest.approx(1 / (2 - 1.0), rel = 1e-6)
    assert np.isnan(states[0, 1, -1])


def test_batch_matches_single_integration():
    spec = catalog("vanderpol")
    X0 = np.array([[1.0, -0.5], [0.0, 2.0]])
    _, states, alive = integrate_batch(spec, X0, 0.0, 2.0, 0.01)
    assert np.all(alive)
    for j in range(2):
        single = integrate(spec, X0[:, j], 0.0, 2.0, 0.01)
        np.testing.assert_allclose(states[:, j, :], single.states, rtol = 1e-12, atol = 1e-12)


def test_burn_in_and_attractor_box():
    spec = catalog("limit_cycle")
    start = burn_in(spec, [0.1, 0.0], 20.0, 0.01)
    assert np.linalg.norm(start) == pytest.approx(1.0, abs = 1e-3)
    np.testing.assert_array_equal(burn_in(spec, [0.1, 0.0], 0.0, 0.01), [0.1, 0.0])

    box = attractor_box(spec, [0.1, 0.0], duration = 20.0, margin = 0.1)
    assert box.shape == (2, 2)
    np.testing.assert_allclose(box[:, 0], -1.2, atol = 1e-2)
    np.testing.assert_allclose(box[:, 1], 1.2, atol = 1e-2)


def test_time_grid():
    np.testing.assert_allclose(time_grid(0.0, 1.0, 0.25), [0, 0.25, 0.5, 0.75, 1.0])
    with pytest.raises(ValueError):
        time_grid(0.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        time_grid(1.0, 0.0, 0.1)


def test_time_grid_stops_at_or_before_t1():
    grid = time_grid(0.0, 1.06, 0.1)
    assert len(grid) == 11
    assert grid[-1] == pytest.approx(1.0)
    assert grid[-1] <= 1.06
    assert len(time_grid(0.0, 100.0, 0.01)) == 10001
    assert len(time_grid(0.0, 0.3, 0.1)) == 4


def test_trajectory_times_must_increase():
    with pytest.raises(ValueError):
        Trajectory([0.0, 1.0, 1.0], np.zeros((1, 3)))
    with pytest.raises(ValueError):
        Trajectory([0.0, 1.0], np.zeros((1, 3)))


def test_trajectory_trim_and_project():
    traj = Trajectory(np.arange(5.0), np.arange(15.0).reshape(3, 5))
    cut = traj.trim(2)
    assert cut.diverged and cut.diverged_at == 2 and len(cut) == 2

    view = traj.project([0, 2])
    view[:] = -1
    assert traj.states[0, 0] == 0.0


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

@pytest.fixture(scope = "module")
def lorenz_traj():
    return integrate(catalog("lorenz3"), [1.0, 1.0, 1.0], 0.0, 100.0, 0.01)


def test_clean_uniform_samples_equal_the_trajectory(lorenz_traj):
    samples = sample(lorenz_traj, spacing = Uniform(0.1))
    assert len(samples) == 1000
    np.testing.assert_array_equal(samples.values, lorenz_traj.states[:, ::10][:, :1000])
    np.testing.assert_allclose(samples.times, 0.1 * np.arange(1000))
    assert samples.uniform_step() == pytest.approx(0.1)


def test_interval_must_be_a_multiple_of_the_step(lorenz_traj):
    with pytest.raises(ValueError):
        sample(lorenz_traj, spacing = Uniform(0.015))


def test_observed_components(lorenz_traj):
    samples = sample(lorenz_traj, [2], Decimated(5))
    assert samples.observed_indices == (2,)
    np.testing.assert_array_equal(samples.values[0], lorenz_traj.states[2, ::5])
    with pytest.raises(ValueError):
        sample(lorenz_traj, [3])


def test_noise_is_seeded(lorenz_traj):
    a = sample(lorenz_traj, spacing = Uniform(0.1), noise_amplitude = 0.5, seed = 7)
    b = sample(lorenz_traj, spacing = Uniform(0.1), noise_amplitude = 0.5, seed = 7)
    c = sample(lorenz_traj, spacing = Uniform(0.1), noise_amplitude = 0.5, seed = 8)
    np.testing.assert_array_equal(a.values, b.values)
    assert not np.array_equal(a.values, c.values)

    clean = sample(lorenz_traj, spacing = Uniform(0.1))
    assert np.max(np.abs(a.values - clean.values)) <= 0.5


def test_noise_has_zero_mean():
    n = 0.5
    traj = Trajectory(np.arange(10**6, dtype = float), np.zeros((1, 10**6)))
    noisy = sample(traj, noise_amplitude = n, seed = 3)
    assert abs(np.mean(noisy.values)) < 3 * n / np.sqrt(12 * 10**4)


def test_random_spacing(lorenz_traj):
    samples = sample(lorenz_traj, spacing = Random(500), seed = 1)
    assert len(samples) == 500
    assert np.all(np.diff(samples.times) > 0)
    assert samples.uniform_step() is None
    with pytest.raises(ValueError):
        sample(lorenz_traj, spacing = Random(10**6))


def test_decimation_longer_than_the_trajectory():
    traj = Trajectory(np.arange(10.0), np.zeros((1, 10)))
    with pytest.raises(EmptySampleError):
        sample(traj, spacing = Decimated(11))


def test_negative_noise_rejected(lorenz_traj):
    with pytest.raises(ValueError):
        sample(lorenz_traj, noise_amplitude = -0.1)


# ---------------------------------------------------------------------------
# csv files
# ---------------------------------------------------------------------------

def test_trajectory_csv_round_trip(tmp_path, lorenz_traj):
    path = tmp_path / "traj.csv"
    io.save_trajectory(path, lorenz_traj)
    with open(path) as f:
        assert f.readline().strip() == "t,x0,x1,x2"
    back = io.load_trajectory(path)
    np.testing.assert_array_equal(back.times, lorenz_traj.times)
    np.testing.assert_array_equal(back.states, lorenz_traj.states)


def test_sample_csv(tmp_path):
    samples = SampleSet.from_series([0.0, 0.5, 1.0], [[1.0, 2.0, 3.0]])
    path = tmp_path / "samples.csv"
    io.save_samples(path, samples)
    back = io.load_samples(path)
    np.testing.assert_array_equal(back.values, samples.values)
    assert back.observed_indices == (0,)


# ---------------------------------------------------------------------------
# true coefficients
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("name, d_max", [
    ("lorenz3", 2), ("chen", 2), ("rossler", 2), ("vanderpol", 3),
    ("duffing", 3), ("limit_cycle", 3), ("lorenz14", 2),
])
def test_library_reproduces_polynomial_systems(name, d_max, rng):
    spec = catalog(name)
    library = CandidateLibrary(spec.dim, d_max, spec.state_names)
    Gamma = true_coefficients(spec, library)
    X = rng.uniform(-2, 2, size = (spec.dim, 7))
    np.testing.assert_allclose(library.evaluate(X) @ Gamma, spec.rhs(X).T, rtol = 1e-10, atol = 1e-9)


def test_lorenz_true_coefficients():
    spec = catalog("lorenz3")
    library = CandidateLibrary(3, 2, spec.state_names)
    Gamma = true_coefficients(spec, library)
    names = library.term_names()
    assert Gamma[names.index("x"), 0] == pytest.approx(-10)
    assert Gamma[names.index("y"), 0] == pytest.approx(10)
    assert Gamma[names.index("x*z"), 1] == pytest.approx(-1)
    assert Gamma[names.index("z"), 2] == pytest.approx(-8 / 3)
    assert np.count_nonzero(Gamma) == 7


def test_terms_outside_the_library():
    spec = catalog("duffing")
    with pytest.raises(ValueError):
        true_coefficients(spec, CandidateLibrary(2, 2))
