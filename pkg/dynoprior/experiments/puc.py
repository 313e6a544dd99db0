import numpy as np
from scipy.signal import square

from .experiment import Experiment
from ..basis_analysis.partition import (
    partition_residual, riesz_ratio, sine_periodic_fit, write_residual_csv
)
from ..coordnet.activations import make_activation
from ..tables import write_table


class PucExperiment(Experiment):
    """
    Partition-of-unity residuals of the sinc, gaussian and relu
    generators.  The sine activation has no such generator, so for it
    a square wave is fitted with an increasing number of sine/cosine
    terms instead.
    """

    name = "puc"

    def execute(self):
        kind = self.pars["activation"]
        if kind == "sine":
            self.sine_fits()
            return

        activation = make_activation(kind, self.pars["omega"])
        result = partition_residual(activation, self.pars["K"], self.pars["grid_points"])
        self.emit("puc_residual.csv", write_residual_csv, result)
        self.summary["max_residual"] = result.max_residual

        rows = []
        for K in self.pars["K_values"]:
            rows.append((K, partition_residual(activation, K, self.pars["grid_points"]).max_residual))
        self.emit("puc_truncation.csv", write_table, ["K", "max_residual"], rows)

        if kind == "sinc":
            self.summary["riesz_ratio"] = riesz_ratio(self.pars["riesz_K"], self.seed)

        self.plot(
            "puc_residual.svg", [(f'K = {self.pars["K"]}', result.grid, result.residuals)],
            "line", title = f'{kind}: partition-of-unity residual', xlabel = "x", ylabel = "residual"
        )

    def sine_fits(self):
        x = np.arange(self.pars["signal_points"]) / self.pars["signal_points"]
        signal = square(2 * np.pi * x)
        terms = np.arange(1, self.pars["n_terms"] + 1)
        errors = [sine_periodic_fit(signal, n) for n in terms]

        self.emit("puc_sine_fit.csv", write_table, ["n_terms", "rms"], zip(terms, errors))
        self.summary["rms"] = errors
        self.plot(
            "puc_sine_fit.svg", [("square wave", terms, errors)], "line",
            title = "sine: truncated fit of a square wave", xlabel = "terms", ylabel = "RMS error"
        )
