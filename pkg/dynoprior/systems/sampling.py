"""
Measurement model y(t) = g(x(t)) + eta, with g a coordinate
projection and eta ~ U(-n, n) applied independently to every entry.
"""
import logging
from dataclasses import dataclass

import numpy as np

from ..errors import EmptySampleError
from ..rng import make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen = True)
class Uniform():
    """
    Samples every dt seconds on the half-open span [t0, t_end), so a
    trajectory over [0, 100] sampled at 0.1 gives 1000 samples
    """
    dt: float

    def indices(self, times, rng):
        step = times[1] - times[0] if times.shape[0] > 1 else self.dt
        stride = self.dt / step
        if stride < 1 - 1e-9 or abs(stride - round(stride)) > 1e-6:
            raise ValueError(
                f'sampling interval {self.dt} is not a multiple of the trajectory step {step}'
            )
        stride = int(round(stride))
        count = int(np.floor((times[-1] - times[0]) / self.dt + 1e-9))
        return np.arange(max(count, 1)) * stride

    def describe(self):
        return f'uniform({self.dt:g})'


@dataclass(frozen = True)
class Random():
    """
    Samples count distinct trajectory points chosen uniformly at random
    """
    count: int

    def indices(self, times, rng):
        if self.count > times.shape[0]:
            raise ValueError(f'cannot draw {self.count} samples from {times.shape[0]} points')
        return np.sort(rng.choice(times.shape[0], size = self.count, replace = False))

    def describe(self):
        return f'random({self.count})'


@dataclass(frozen = True)
class Decimated():
    """
    Keeps every factor-th trajectory point
    """
    factor: int

    def indices(self, times, rng):
        if self.factor < 1:
            raise ValueError('decimation factor must be at least 1')
        if self.factor > times.shape[0]:
            raise EmptySampleError(
                f'decimation factor {self.factor} exceeds the trajectory length {times.shape[0]}'
            )
        return np.arange(0, times.shape[0], self.factor)

    def describe(self):
        return f'decimated({self.factor})'


@dataclass(frozen = True, eq = False)
class SampleSet():
    """
    Class for storing (possibly noisy, sparse, irregular) measurements

    times:              sample times (not necessarily uniform)
    values:             d x Q array of measured components
    observed_indices:   which state components were measured
    noise_amplitude:    n in eta ~ U(-n, n)
    spacing:            the spacing mode used to pick the times
    """
    times: np.ndarray
    values: np.ndarray
    observed_indices: tuple
    noise_amplitude: float = 0.0
    spacing: object = None

    def __post_init__(self):
        times = np.asarray(self.times, dtype = float)
        values = np.atleast_2d(np.asarray(self.values, dtype = float))
        if values.shape[1] != times.shape[0]:
            raise ValueError(
                f'values have {values.shape[1]} columns but there are {times.shape[0]} times'
            )
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "observed_indices", tuple(self.observed_indices))

    def __len__(self):
        return self.times.shape[0]

    def uniform_step(self, rtol = 1e-6):
        """
        Returns the sampling interval if the times are uniformly
        spaced and None otherwise
        """
        if self.times.shape[0] < 2:
            return None
        dt = np.diff(self.times)
        if np.allclose(dt, dt[0], rtol = rtol, atol = 0):
            return float(np.mean(dt))
        return None

    @classmethod
    def from_series(cls, times, values, noise_amplitude = 0.0):
        """
        Wraps an already measured series
        """
        values = np.atleast_2d(values)
        return cls(times, values, tuple(range(values.shape[0])), noise_amplitude)


def sample(traj, observed_indices = None, spacing = None, noise_amplitude = 0.0, seed = 0):
    """
    Applies the measurement model to a trajectory.

    The same seed always gives bit-identical values.
    """
    if noise_amplitude < 0:
        raise ValueError('noise amplitude must be non-negative')

    if observed_indices is None:
        observed_indices = range(traj.dim)
    observed_indices = tuple(int(i) for i in observed_indices)
    for i in observed_indices:
        if not 0 <= i < traj.dim:
            raise ValueError(f'component {i} is not a state of a {traj.dim}-dimensional trajectory')

    if spacing is None:
        spacing = Decimated(1)

    rng = make_rng(seed)
    cols = spacing.indices(traj.times, rng)
    if cols.size == 0:
        raise EmptySampleError('no samples selected')

    times = traj.times[cols]
    values = traj.states[np.ix_(observed_indices, cols)]

    if noise_amplitude > 0:
        values = values + rng.uniform(-noise_amplitude, noise_amplitude, size = values.shape)

    logger.debug("sampled %d points (%s, n = %g)", times.size, spacing.describe(), noise_amplitude)

    return SampleSet(times, values, observed_indices, float(noise_amplitude), spacing)
