import logging

import numpy as np

from .experiment import Experiment
from ..concurrency import parallel_map
from ..coordnet.fitting import fit_signal
from ..errors import DivergenceError, ParameterError
from ..sindy.derivatives import derivative_finite_difference, derivative_spectral, network_reconstruction
from ..sindy.library import CandidateLibrary
from ..sindy.report import write_coefficients_csv, write_report, equations
from ..sindy.stlsq import fit, simulate_model, coefficient_error
from ..systems.coefficients import true_coefficients
from ..systems.integrator import integrate
from ..systems.sampling import sample, Uniform
from ..tables import write_table

logger = logging.getLogger(__name__)

DERIVATIVES = {
    "fd": "finite_difference",
    "spectral": "spectral",
    "network": "network_jacobian",
}


class SindyExperiment(Experiment):
    """
    Samples a trajectory at each noise level, estimates the derivatives
    with the chosen method, fits a sparse model and compares it with
    the true equations
    """

    name = "sindy"

    def derivative(self, samples, seed):
        """
        Returns the states to build the library from and the matching
        derivative estimate.  The network pipeline replaces the samples
        by the networks' reconstruction.
        """
        method = self.pars["deriv"]
        if method == "fd":
            return samples, derivative_finite_difference(samples)
        if method == "spectral":
            return samples, derivative_spectral(samples)
        if method == "network":
            d = samples.values.shape[0]
            cfg = self.train_config(seed)

            def fit_window(times, values):
                net, _ = fit_signal(
                    times[None, :], values, self.widths(1, d), self.activation(), cfg
                )
                return net

            return network_reconstruction(
                samples, fit_window, self.pars["window"], self.pars["margin"]
            )
        raise ParameterError(f'unknown derivative method {method!r}; use fd, spectral or network')

    def fit_one(self, traj, noise, seed):
        samples = sample(traj, None, Uniform(self.pars["sample_dt"]), noise, seed)
        states, ydot = self.derivative(samples, seed)
        model = fit(
            states, ydot, self.pars["d_max"], self.pars["threshold"],
            self.pars["ridge_lambda"], names = self.spec.state_names
        )
        return model

    def execute(self):
        self.spec = spec = self.system()
        dt = self.pars["integration_dt"]
        traj = self.reference_trajectory(spec, self.pars["t_end"], dt)

        noise = self.pars["noise"]
        levels = [float(n) for n in np.atleast_1d(noise)]
        seeds = self.sub_seeds(len(levels))

        models = parallel_map(lambda job: self.fit_one(traj, *job), list(zip(levels, seeds)))

        library = CandidateLibrary(spec.dim, self.pars["d_max"], spec.state_names)
        try:
            truth = true_coefficients(spec, library)
        except ValueError:
            logger.warning("%s is not polynomial in a degree-%d library", spec.name, library.d_max)
            truth = None

        rows = []
        for n, model in zip(levels, models):
            tag = f'n{n:g}'
            self.emit(f'sindy_{tag}_coefficients.csv', write_coefficients_csv, model)
            self.emit(f'sindy_{tag}_equations.txt', write_report, model)
            error = coefficient_error(model, truth) if truth is not None else float("nan")
            rows.append((n, self.pars["deriv"], error, int(np.sum(model.gamma != 0))))
            self.summary[tag] = {"equations": equations(model), "coefficient_error": error}
            logger.info("noise %g: coefficient error %.4g", n, error)

        self.emit("sindy_summary.csv", write_table, ["noise", "deriv", "coefficient_error", "nonzero"], rows)

        self.compare_trajectories(traj, levels, models)

    def compare_trajectories(self, traj, levels, models):
        """
        Integrates each recovered model from the first sampled state
        and plots its first component against the truth
        """
        dt = self.pars["integration_dt"]
        horizon = self.pars["simulate_t"]
        x0 = traj.states[:, 0]
        truth = integrate(self.spec, x0, 0.0, horizon, dt)

        series = [("truth", truth.times, truth.states[0])]
        for n, model in zip(levels, models):
            try:
                sim = simulate_model(model, x0, 0.0, horizon, dt)
            except DivergenceError as err:
                logger.warning("model for noise %g diverged at step %d", n, err.step)
                continue
            series.append((f'n = {n:g}', sim.times, sim.states[0]))

        self.plot(
            "sindy_simulation.svg", series, "line",
            title = f'{self.spec.name}: recovered dynamics', xlabel = "t",
            ylabel = self.spec.state_names[0]
        )
