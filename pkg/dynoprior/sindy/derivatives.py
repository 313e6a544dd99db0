"""
Estimates of the time derivative of measured samples: finite
differences and spectral differentiation (uniform grids only) and the
analytic Jacobian of coordinate networks fitted to the samples, either
over the whole span or window by window.
"""
from dataclasses import dataclass

import numpy as np

from ..errors import UnsupportedSpacingError
from ..systems.sampling import SampleSet

METHODS = ("finite_difference", "spectral", "network_jacobian")


@dataclass(frozen = True, eq = False)
class DerivativeEstimate():
    """
    times:  sample times
    ydot:   d x N array of derivative estimates
    method: one of finite_difference, spectral, network_jacobian
    """
    times: np.ndarray
    ydot: np.ndarray
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f'unknown derivative method {self.method!r}')
        ydot = np.atleast_2d(np.asarray(self.ydot, dtype = float))
        if ydot.shape[1] != np.shape(self.times)[0]:
            raise ValueError('derivative columns do not match the sample times')
        object.__setattr__(self, "ydot", ydot)


def _uniform_step(samples, method):
    dt = samples.uniform_step()
    if dt is None:
        raise UnsupportedSpacingError(f'{method} derivatives need uniformly spaced samples')
    return dt


def derivative_finite_difference(samples):
    """
    Second-order central differences in the interior and second-order
    one-sided differences at the two ends
    """
    if len(samples) < 3:
        raise ValueError('finite differences need at least 3 samples')
    dt = _uniform_step(samples, "finite-difference")
    ydot = np.gradient(samples.values, dt, axis = 1, edge_order = 2)
    return DerivativeEstimate(samples.times, ydot, "finite_difference")


def derivative_spectral(samples):
    """
    Multiplies the discrete Fourier transform by 2 pi i f and
    transforms back.  The series is treated as one period of a
    periodic signal; for even lengths the Nyquist bin is dropped.
    """
    N = len(samples)
    if N < 8:
        raise ValueError('spectral derivatives need at least 8 samples')
    dt = _uniform_step(samples, "spectral")

    freqs = np.fft.rfftfreq(N, dt)
    spectrum = np.fft.rfft(samples.values, axis = 1) * (2j * np.pi * freqs)
    if N % 2 == 0:
        spectrum[:, -1] = 0
    ydot = np.fft.irfft(spectrum, n = N, axis = 1)

    return DerivativeEstimate(samples.times, ydot, "spectral")


def derivative_network(net, times):
    """
    Derivative of a coordinate network y(t) with respect to raw time,
    one column per entry of times
    """
    if net.widths[0] != 1:
        raise ValueError('derivative_network needs a network with a single (time) input')
    times = np.asarray(times, dtype = float).reshape(-1)
    J = net.input_jacobians(times[None, :])
    return DerivativeEstimate(times, J[:, 0, :], "network_jacobian")


def window_owners(times, window):
    """
    Index of the window each time falls in, after splitting the span
    into the fewest equal windows no longer than window
    """
    times = np.asarray(times, dtype = float)
    span = times[-1] - times[0]
    if window is None or span <= 0 or window >= span:
        return np.zeros(times.shape[0], dtype = int)
    if window <= 0:
        raise ValueError('window must be positive')
    n = int(np.ceil(span / window - 1e-9))
    return np.minimum(((times - times[0]) / span * n).astype(int), n - 1)


def network_reconstruction(samples, fit_window, window = None, margin = 0.0):
    """
    Denoised states and their derivatives from coordinate networks.

    fit_window(times, values) trains and returns a network with a
    single time input.  One network is fitted per window, on the
    samples within margin of it, and evaluated on the window itself.
    Returns the reconstructed samples (same times, network values) and
    the network derivative at the sample times.
    """
    if margin < 0:
        raise ValueError('margin must be non-negative')
    times = samples.times
    owners = window_owners(times, window)

    values = np.empty_like(samples.values)
    ydot = np.empty_like(samples.values)
    for w in np.unique(owners):
        keep = owners == w
        lo = times[keep][0] - margin
        hi = times[keep][-1] + margin
        train = (times >= lo) & (times <= hi)
        net = fit_window(times[train], samples.values[:, train])
        values[:, keep] = net.forward(times[keep][None, :])
        ydot[:, keep] = derivative_network(net, times[keep]).ydot

    reconstructed = SampleSet(
        times, values, samples.observed_indices, samples.noise_amplitude, samples.spacing
    )
    return reconstructed, DerivativeEstimate(times, ydot, "network_jacobian")
