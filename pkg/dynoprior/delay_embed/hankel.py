import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import hankel as scipy_hankel

from ..errors import HankelSizeError

logger = logging.getLogger(__name__)

SOURCES = ("raw_samples", "network_surrogate")

# delay windows n * tau for the two kinds of series
RAW_WINDOW = 0.1
SURROGATE_WINDOW = 0.2


@dataclass(frozen = True, eq = False)
class HankelMatrix():
    """
    Delay-embedded series, data[i][j] = y(t_{i+j}).  Row i holds the
    n delayed values starting at time t0 + i tau.

    data:   m x n array
    tau:    sampling interval of the series
    t0:     time of the first sample
    source: raw_samples or network_surrogate
    """
    data: np.ndarray
    tau: float
    t0: float = 0.0
    source: str = "raw_samples"

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f'unknown Hankel source {self.source!r}')

    @property
    def shape(self):
        return self.data.shape

    def row_times(self):
        return self.t0 + self.tau * np.arange(self.data.shape[0])


def hankel(series, m, n, tau = 1.0, t0 = 0.0, source = "raw_samples"):
    """
    Builds the m x n Hankel matrix of a uniformly sampled scalar series
    """
    y = np.asarray(series, dtype = float).reshape(-1)
    if m < 1 or n < 1:
        raise ValueError('Hankel dimensions must be positive')
    if y.shape[0] < m + n - 1:
        raise HankelSizeError(
            f'a {m} x {n} Hankel matrix needs {m + n - 1} samples, the series has {y.shape[0]}'
        )
    data = scipy_hankel(y[:m], y[m - 1:m + n - 1])
    return HankelMatrix(data, float(tau), float(t0), source)


def hankel_shape(length, tau, window = RAW_WINDOW):
    """
    Number of rows and columns for a series of the given length:
    n = round(window / tau) delays and m = length - n + 1 rows
    """
    n = max(1, int(round(window / tau)))
    m = length - n + 1
    if m < 1:
        raise HankelSizeError(f'series of length {length} is shorter than the {n} delays requested')
    return m, n


def delay_hankel(series, tau, t0 = 0.0, window = RAW_WINDOW, source = "raw_samples"):
    """
    Hankel matrix with the default shape for the given delay window
    """
    y = np.asarray(series, dtype = float).reshape(-1)
    m, n = hankel_shape(y.shape[0], tau, window)
    logger.debug("Hankel matrix %d x %d (n tau = %g)", m, n, n * tau)
    return hankel(y, m, n, tau, t0, source)
