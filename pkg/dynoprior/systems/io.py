"""
CSV input/output for trajectories and sample sets.  Files have a
header t,x0,x1,... and one row per time point, written with 17
significant digits so that values survive a round trip exactly.
"""
import numpy as np

from .trajectory import Trajectory
from .sampling import SampleSet


def _header(n):
    return ",".join(["t"] + [f'x{i}' for i in range(n)])


def write_csv(path, times, values):
    """
    Writes a time column followed by the rows of values
    """
    values = np.atleast_2d(values)
    data = np.column_stack([times, values.T])
    np.savetxt(path, data, delimiter = ",", header = _header(values.shape[0]),
               comments = "", fmt = "%.17g")


def read_csv(path):
    """
    Returns (times, values) from a file written by write_csv
    """
    data = np.loadtxt(path, delimiter = ",", skiprows = 1, ndmin = 2)
    return data[:, 0], data[:, 1:].T


def save_trajectory(path, traj):
    write_csv(path, traj.times, traj.states)


def load_trajectory(path):
    times, states = read_csv(path)
    return Trajectory(times, states)


def save_samples(path, samples):
    write_csv(path, samples.times, samples.values)


def load_samples(path, observed_indices = None, noise_amplitude = 0.0):
    """
    Reads a sample set.  The file does not record which state
    components were observed, so they default to 0, 1, ...
    """
    times, values = read_csv(path)
    if observed_indices is None:
        observed_indices = range(values.shape[0])
    return SampleSet(times, values, tuple(observed_indices), noise_amplitude)
