"""
Numerical checks of the sampling-theory conditions on a generator F:
the partition of unity sum_k F(x + k) = 1, stability of the shifted
family (Riesz bounds) and reconstruction of periodic signals in a
sine/cosine basis.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from ..coordnet.activations import make_activation, Activation
from ..rng import make_rng
from ..tables import write_table

logger = logging.getLogger(__name__)


@dataclass(frozen = True, eq = False)
class PartitionResidual():
    """
    activation:     the generator that was checked
    truncation_K:   shifts k = -K, ..., K were summed
    grid:           evaluation points in [0, 1)
    residuals:      |sum_k F(x + k) - 1| at each grid point
    """
    activation: Activation
    truncation_K: int
    grid: np.ndarray
    residuals: np.ndarray

    @property
    def max_residual(self):
        return float(np.max(self.residuals))


def generator(activation):
    """
    Returns the generator F used for the partition-of-unity check.
    sinc uses the unit-bandwidth normalised sinc sin(pi x)/(pi x)
    whatever its omega; gaussian and relu are used as they are.
    """
    if activation.kind == "sinc":
        return np.sinc
    if activation.kind in ("gaussian", "relu"):
        return activation
    raise ValueError(
        f'{activation.kind} has no partition-of-unity generator; use sine_periodic_fit'
    )


def partial_sums(activation, K, grid):
    """
    sum_{|k| <= K} F(x + k) at every grid point
    """
    F = generator(activation)
    k = np.arange(-K, K + 1)
    return F(grid[:, None] + k[None, :]).sum(axis = 1)


def partition_residual(activation, K, grid_points = 64):
    """
    Evaluates the truncated partition-of-unity residual on a uniform
    grid of [0, 1).

    For the gaussian the sum is only constant up to a scale factor, so
    the residual is taken after dividing by its mean.
    """
    activation = make_activation(activation)
    if K < 1:
        raise ValueError('K must be at least 1')
    if grid_points < 1:
        raise ValueError('grid_points must be at least 1')

    grid = np.arange(grid_points) / grid_points
    S = partial_sums(activation, int(K), grid)

    if activation.kind == "gaussian":
        S = S / np.mean(S)

    residuals = np.abs(S - 1)
    logger.debug("%s partition of unity, K = %d: max residual %.3e", activation.kind, K, residuals.max())

    return PartitionResidual(activation, int(K), grid, residuals)


def riesz_ratio(K = 200, seed = 0, step = 0.05, padding = 50.0):
    """
    Ratio ||sum_k c(k) F(x - k)||^2 / ||c||^2 for random coefficients
    c(k), |k| <= K, with F the normalised sinc.  The squared norm is
    computed by trapezoidal quadrature on [-K - padding, K + padding].
    Values inside the frame bounds indicate a stable (Riesz) family.
    """
    rng = make_rng(seed)
    k = np.arange(-K, K + 1)
    c = rng.standard_normal(k.shape[0])

    x = np.arange(-K - padding, K + padding + step / 2, step)
    f = np.zeros_like(x)
    for ck, kk in zip(c, k):
        f += ck * np.sinc(x - kk)

    return float(trapezoid(f**2, x) / np.sum(c**2))


def sine_basis(x, n_terms):
    """
    Columns cos(2 pi n x) = sin(2 pi n x + pi/2) for n = 0..n_terms and
    sin(2 pi n x) for n = 1..n_terms
    """
    n = np.arange(n_terms + 1)
    cos_part = np.sin(2 * np.pi * np.outer(x, n) + np.pi / 2)
    sin_part = np.sin(2 * np.pi * np.outer(x, n[1:]))
    return np.hstack([cos_part, sin_part])


def sine_periodic_fit(signal, n_terms):
    """
    RMS error of the least-squares fit of one period of a signal,
    sampled at x = j / N on [0, 1), in the truncated sine/cosine basis
    """
    if n_terms < 1:
        raise ValueError('n_terms must be at least 1')

    y = np.asarray(signal, dtype = float).reshape(-1)
    x = np.arange(y.shape[0]) / y.shape[0]
    A = sine_basis(x, n_terms)
    coef, *_ = np.linalg.lstsq(A, y, rcond = None)
    return float(np.sqrt(np.mean((A @ coef - y)**2)))


def write_residual_csv(path, result):
    write_table(path, ["x", "residual"], zip(result.grid, result.residuals))
