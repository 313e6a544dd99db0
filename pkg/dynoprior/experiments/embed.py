import logging

import numpy as np

from .experiment import Experiment
from ..coordnet.fitting import fit_signal
from ..delay_embed.geometry import closed_curve_gap, procrustes_correlation
from ..delay_embed.hankel import delay_hankel
from ..delay_embed.takens import takens_reconstruct, surrogate_resample, write_embedding_csv
from ..errors import EmptySampleError, ParameterError, UnsupportedSpacingError
from ..systems.sampling import sample, Uniform, Random

logger = logging.getLogger(__name__)


def align(reference, other):
    """
    Puts two embeddings on the times of the second one.  The reference
    coordinates are linearly interpolated at every time of other that
    lies inside the reference time span; times outside it are dropped.
    """
    t = np.asarray(other.times, dtype = float)
    inside = (t >= reference.times[0] - 1e-9) & (t <= reference.times[-1] + 1e-9)
    if np.count_nonzero(inside) < 3:
        raise EmptySampleError(
            f'embeddings overlap in {np.count_nonzero(inside)} times; at least 3 are needed'
        )
    t = np.clip(t[inside], reference.times[0], reference.times[-1])
    a = np.vstack([np.interp(t, reference.times, row) for row in reference.coords])
    return a, other.coords[:, inside]


class EmbedExperiment(Experiment):
    """
    Reconstructs the attractor from one observed component, either
    directly from the samples (raw) or from a network fitted to them
    (surrogate), and compares it with the reconstruction from clean
    uniform samples
    """

    name = "embed"

    def spacing(self, sample_dt):
        kind = self.pars["spacing"]
        if kind == "uniform":
            return Uniform(sample_dt)
        if kind == "sparse":
            return Uniform(self.pars["sparse_factor"] * sample_dt)
        if kind == "random":
            return Random(self.pars["samples"])
        raise ParameterError(f'unknown spacing {kind!r}; use uniform, random or sparse')

    def execute(self):
        pipeline = self.pars["pipeline"]
        if pipeline not in ("raw", "surrogate"):
            raise ParameterError(f'unknown pipeline {pipeline!r}; use raw or surrogate')

        spec = self.system()
        t_end = self.pars["t_end"]
        sample_dt = t_end / self.pars["samples"]
        k = self.pars["k"]
        observed = self.pars["observed"]
        window = self.pars["raw_window" if pipeline == "raw" else "surrogate_window"]

        traj = self.reference_trajectory(spec, t_end, self.pars["integration_dt"])

        # clean uniform samples embedded with the same delay window
        clean = sample(traj, [observed], Uniform(sample_dt), 0.0, self.seed)
        reference = takens_reconstruct(
            delay_hankel(clean.values[0], sample_dt, clean.times[0], window), k
        )

        samples = sample(traj, [observed], self.spacing(sample_dt), self.pars["noise"], self.seed)

        if pipeline == "raw":
            tau = samples.uniform_step()
            if tau is None:
                raise UnsupportedSpacingError('the raw pipeline needs uniformly spaced samples')
            h = delay_hankel(samples.values[0], tau, samples.times[0], window)
        else:
            net, _ = fit_signal(
                samples.times[None, :], samples.values, self.widths(1, 1),
                self.activation(), self.train_config(self.seed)
            )
            surrogate = surrogate_resample(net, samples.times[0], samples.times[-1], sample_dt)
            self.summary["extrapolated"] = surrogate.extrapolated
            truth = np.interp(surrogate.times, traj.times, traj.states[observed])
            self.summary["surrogate_relative_rms"] = float(
                np.sqrt(np.mean((surrogate.values - truth)**2) / np.mean(truth**2))
            )
            h = delay_hankel(
                surrogate.values, sample_dt, surrogate.times[0], window,
                source = "network_surrogate"
            )

        embedding = takens_reconstruct(h, k)

        self.emit("embed_reference.csv", write_embedding_csv, reference)
        self.emit(f'embed_{pipeline}.csv', write_embedding_csv, embedding)

        a, b = align(reference, embedding)
        self.summary["procrustes_correlation"] = procrustes_correlation(a, b, standardize = True)
        self.summary["closed_curve_gap"] = closed_curve_gap(embedding.coords)
        logger.info(
            "%s pipeline: Procrustes correlation %.4f, closed-curve gap %.4f", pipeline,
            self.summary["procrustes_correlation"], self.summary["closed_curve_gap"]
        )

        if k >= 2:
            self.plot(
                "embed.svg",
                [
                    ("clean raw", reference.coords[0], reference.coords[1]),
                    (pipeline, embedding.coords[0], embedding.coords[1]),
                ],
                "scatter", title = f'{spec.name}: delay embedding', xlabel = "e1", ylabel = "e2"
            )
