import logging

import numpy as np

from ..coordnet.fitting import fit_signal
from ..coordnet.training import TrainConfig
from ..systems.trajectory import Trajectory
from ..tables import write_table

logger = logging.getLogger(__name__)

DEFAULT_WIDTH = 256
DEFAULT_DEPTH = 4


def default_widths(dim):
    return [dim] + [DEFAULT_WIDTH] * (DEFAULT_DEPTH - 1) + [dim]


def train_forecaster(pairs, widths = None, activation = "sinc", cfg = None):
    """
    Trains a network mapping x_k to x_{k+1}.  The columns of x1 are the
    inputs (normalised per dimension over x1) and the columns of x2
    the targets.
    """
    D = pairs.dim
    if widths is None:
        widths = default_widths(D)
    widths = list(widths)
    if widths[0] != D or widths[-1] != D:
        raise ValueError(f'a forecaster for a {D}-dimensional system needs n0 = nL = {D}')
    if cfg is None:
        cfg = TrainConfig()

    net, history = fit_signal(pairs.x1, pairs.x2, widths, activation, cfg)
    logger.info("Forecaster trained on %d pairs, final loss %.3e", len(pairs), history[-1])
    return net


def rollout(model, x0, steps, dt = None):
    """
    Applies a one-step model recursively.  The returned trajectory has
    times k dt, k = 0..steps; if a state becomes non-finite the
    trajectory is cut there and flagged as diverged.

    dt defaults to the model's own step.  Networks carry no step, so
    it must be given for them.
    """
    if steps < 1:
        raise ValueError('steps must be at least 1')
    if dt is None:
        dt = getattr(model, "dt", None)
    if dt is None:
        raise ValueError(f'{type(model).__name__} has no time step; pass dt to rollout')

    x = np.asarray(x0, dtype = float).reshape(-1)
    X = np.empty((x.shape[0], steps + 1))
    X[:, 0] = x
    times = dt * np.arange(steps + 1)

    with np.errstate(over = 'ignore', invalid = 'ignore'):
        for k in range(1, steps + 1):
            x = model.forward(x)
            if not np.all(np.isfinite(x)):
                logger.warning("Rollout diverged at step %d", k)
                return Trajectory(times, X).trim(k)
            X[:, k] = x

    return Trajectory(times, X)


def one_step_rms(model, pairs):
    """
    Root-mean-square error of one-step predictions over all pairs
    """
    return float(np.sqrt(np.mean((model.forward(pairs.x1) - pairs.x2)**2)))


def horizon_rms(model, pairs, horizon):
    """
    RMS error of k-step-ahead predictions, k = 1..horizon, started from
    every state of every trajectory in pairs that has horizon true
    successors.  Returns an array of length horizon.
    """
    sq = np.zeros(horizon)
    count = 0
    for _, S in pairs.trajectories():
        n_start = S.shape[1] - horizon
        if n_start < 1:
            continue
        X = S[:, :n_start]
        with np.errstate(over = 'ignore', invalid = 'ignore'):
            for k in range(1, horizon + 1):
                X = model.forward(X)
                sq[k - 1] += np.sum((X - S[:, k:k + n_start])**2)
        count += X.size
    if count == 0:
        raise ValueError(f'no trajectory is longer than the horizon {horizon}')
    return np.sqrt(sq / count)


def inside_box(traj, box, factor = 1.5):
    """
    Per-step flags telling whether the state lies in the box enlarged
    by factor about its centre
    """
    box = np.asarray(box, dtype = float)
    centre = box.mean(axis = 1)
    half = factor * (box[:, 1] - box[:, 0]) / 2
    return np.all(np.abs(traj.states - centre[:, None]) <= half[:, None], axis = 0)


def project(traj, components):
    """
    Two (or more) chosen components of a trajectory, for plotting.
    The trajectory itself is left untouched.
    """
    return traj.project(components)


def write_comparison_csv(path, rms_network, rms_dmd):
    rows = [(k + 1, a, b) for k, (a, b) in enumerate(zip(rms_network, rms_dmd))]
    write_table(path, ["step", "rms_network", "rms_dmd"], rows)
