import numpy as np

from .experiment import Experiment
from ..basis_analysis.sweep import omega_sweep, write_sweep_csv


class SweepExperiment(Experiment):
    """
    Lipschitz estimate and penultimate stable rank of freshly
    initialised networks over a grid of bandwidths
    """

    name = "sweep"

    def execute(self):
        kind = self.pars["activation"]
        samples = np.linspace(-1, 1, self.pars["n_samples"])[None, :]
        result = omega_sweep(
            self.widths(1, 1), kind, self.pars["omegas"], samples,
            self.pars["seeds"], self.pars["layer"]
        )

        self.emit("sweep.csv", write_sweep_csv, result)
        self.summary["omegas"] = result.omegas.tolist()
        self.summary["median_lipschitz"] = result.lipschitz_estimates.tolist()
        self.summary["median_stable_rank"] = result.stable_ranks.tolist()

        self.plot(
            "sweep_lipschitz.svg", [("median Lipschitz", result.omegas, result.lipschitz_estimates)],
            "line", title = f'{kind}: Lipschitz estimate at initialisation', xlabel = "omega",
            ylabel = "Lipschitz estimate"
        )
        self.plot(
            "sweep_stable_rank.svg", [("median stable rank", result.omegas, result.stable_ranks)],
            "line", title = f'{kind}: penultimate stable rank at initialisation', xlabel = "omega",
            ylabel = "stable rank"
        )
