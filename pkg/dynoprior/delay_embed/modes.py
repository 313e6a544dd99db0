import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import svdvals

from ..errors import UntrustedFeaturesError
from ..tables import write_table

logger = logging.getLogger(__name__)


@dataclass(frozen = True, eq = False)
class ModeSpectrum():
    """
    singular_values:    descending singular values
    dominant_count:     number with sigma_i / sigma_1 > dominance_ratio
    dominance_ratio:    the cutoff used
    """
    singular_values: np.ndarray
    dominant_count: int
    dominance_ratio: float

    @classmethod
    def from_singular_values(cls, s, dominance_ratio = 0.02):
        if not 0 < dominance_ratio < 1:
            raise ValueError('dominance_ratio must lie in (0, 1)')
        s = np.sort(np.asarray(s, dtype = float))[::-1]
        if s.size == 0 or s[0] == 0:
            return cls(s, 0, dominance_ratio)
        return cls(s, int(np.sum(s / s[0] > dominance_ratio)), dominance_ratio)

    @property
    def ratios(self):
        if self.singular_values[0] == 0:
            return np.zeros_like(self.singular_values)
        return self.singular_values / self.singular_values[0]


def time_delay_modes(h, dominance_ratio = 0.02):
    """
    Singular spectrum of a Hankel matrix
    """
    spectrum = ModeSpectrum.from_singular_values(svdvals(h.data), dominance_ratio)
    logger.info("Time-delay decomposition: %d dominant modes", spectrum.dominant_count)
    return spectrum


def neural_modes(net, times, targets, dominance_ratio = 0.02, gate = 1e-4):
    """
    Singular spectrum of the penultimate features of a coordinate
    network fitted to a scalar series.

    The features are only meaningful if the network reproduces the
    series, so the reconstruction MSE must not exceed gate times the
    variance of the targets.
    """
    times = np.asarray(times, dtype = float).reshape(-1)
    targets = np.atleast_2d(np.asarray(targets, dtype = float))

    error = float(np.mean((net.forward(times[None, :]) - targets)**2))
    limit = gate * float(np.var(targets))
    if error > limit:
        raise UntrustedFeaturesError(
            f'network reconstruction MSE {error:.3e} exceeds {gate:g} x signal variance ({limit:.3e})'
        )

    spectrum = ModeSpectrum.from_singular_values(svdvals(net.features(times[None, :])), dominance_ratio)
    logger.info("Neural decomposition: %d dominant modes", spectrum.dominant_count)
    return spectrum


def write_spectrum_csv(path, spectrum):
    rows = [
        (i + 1, s, r, i < spectrum.dominant_count)
        for i, (s, r) in enumerate(zip(spectrum.singular_values, spectrum.ratios))
    ]
    write_table(path, ["index", "sigma", "sigma_ratio", "dominant"], rows)
