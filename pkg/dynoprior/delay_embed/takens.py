import logging
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import svd

from ..systems.integrator import time_grid
from ..tables import write_table

logger = logging.getLogger(__name__)


@dataclass(frozen = True, eq = False)
class EmbeddingResult():
    """
    coords: k x m array, the time courses of the k dominant delay modes
    k:      embedding dimension
    times:  time of each column (the start time of each Hankel row)
    """
    coords: np.ndarray
    k: int
    times: np.ndarray


@dataclass(frozen = True, eq = False)
class SurrogateSeries():
    """
    Uniform resampling of a network reconstruction.  extrapolated is
    True when part of the grid lies outside the trained input range.
    """
    times: np.ndarray
    values: np.ndarray
    extrapolated: bool = False


def takens_reconstruct(h, k):
    """
    Projects the delay vectors onto the k leading singular directions
    of the Hankel matrix H = U S V^T.  The coordinates are the rows of
    S_k U_k^T, with signs fixed so that the largest entry of each
    column of U_k is positive.
    """
    m, n = h.data.shape
    if not 1 <= k <= min(m, n):
        raise ValueError(f'k must lie in [1, {min(m, n)}] for a {m} x {n} Hankel matrix')

    U, s, _ = svd(h.data, full_matrices = False)
    U = U[:, :k]
    idx = np.argmax(np.abs(U), axis = 0)
    U = U * np.sign(U[idx, np.arange(k)])

    coords = (U * s[:k]).T
    return EmbeddingResult(coords, k, h.row_times())


def surrogate_resample(net, t0, t1, dt, component = 0, tol = 1e-9):
    """
    Evaluates a fitted time network on the uniform grid t0, t0 + dt, ...
    Querying outside the trained range is allowed but flagged.
    """
    times = time_grid(t0, t1, dt)
    lo, hi = net.trained_range()[0]
    span = hi - lo
    extrapolated = bool(times[0] < lo - tol * span or times[-1] > hi + tol * span)

    if extrapolated:
        message = f'resampling on [{t0:g}, {t1:g}] extrapolates beyond the trained range [{lo:g}, {hi:g}]'
        logger.warning(message)
        warnings.warn(message, RuntimeWarning)

    values = net.forward(times[None, :])[component]
    return SurrogateSeries(times, values, extrapolated)


def write_embedding_csv(path, result):
    header = ["t"] + [f'e{i + 1}' for i in range(result.k)]
    write_table(path, header, zip(result.times, *result.coords))
