import logging

import numpy as np

from .experiment import Experiment
from ..coordnet.fitting import fit_signal
from ..delay_embed.hankel import delay_hankel
from ..delay_embed.modes import time_delay_modes, neural_modes, write_spectrum_csv
from ..errors import ParameterError
from ..systems.sampling import sample, Uniform

logger = logging.getLogger(__name__)

METHODS = ("tdd", "nd", "both")


class ModesExperiment(Experiment):
    """
    Counts the modes behind one observed component, by the singular
    values of its Hankel matrix (tdd) and of the penultimate features
    of a network fitted to it (nd)
    """

    name = "modes"

    def record(self, key, spectrum):
        """
        Writes one spectrum as soon as it is available
        """
        self.emit(f'modes_{key}_spectrum.csv', write_spectrum_csv, spectrum)
        self.summary[f'{key}_dominant_count'] = spectrum.dominant_count
        return spectrum

    def execute(self):
        method = self.pars["method"]
        if method not in METHODS:
            raise ParameterError(f'unknown mode method {method!r}; use tdd, nd or both')

        spec = self.system()
        t_end = self.pars["t_end"]
        dt = self.pars["integration_dt"]
        sample_dt = t_end / self.pars["samples"]

        traj = self.reference_trajectory(spec, t_end, dt)
        observed = self.pars["observed"]
        samples = sample(traj, [observed], Uniform(sample_dt), self.pars["noise"], self.seed)
        series = samples.values[0]
        ratio = self.pars["ratio"]

        spectra = {}
        if method in ("tdd", "both"):
            h = delay_hankel(series, sample_dt, samples.times[0], self.pars["window"])
            spectra["tdd"] = self.record("tdd", time_delay_modes(h, ratio))

        if method in ("nd", "both"):
            net, history = fit_signal(
                samples.times[None, :], series[None, :], self.widths(1, 1),
                self.activation(), self.train_config(self.seed)
            )
            self.summary["nd_final_loss"] = float(history[-1])
            spectra["nd"] = self.record(
                "nd", neural_modes(net, samples.times, series, ratio, self.pars["gate"])
            )

        self.plot(
            "modes_spectrum.svg",
            [
                (key, np.arange(1, s.singular_values.size + 1), s.ratios)
                for key, s in spectra.items()
            ],
            "line", title = f'{spec.name}: singular spectrum of {spec.state_names[observed]}',
            xlabel = "index", ylabel = "sigma_i / sigma_1", logy = True
        )
