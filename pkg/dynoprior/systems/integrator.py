import logging

import numpy as np

from .trajectory import Trajectory
from ..errors import DivergenceError

logger = logging.getLogger(__name__)


def time_grid(t0, t1, dt):
    """
    Uniform grid t0, t0 + dt, ... never stepping past t1
    """
    if dt <= 0:
        raise ValueError('dt must be positive')
    if t1 < t0:
        raise ValueError('t1 must not precede t0')
    n = int(np.floor((t1 - t0) / dt + 1e-9))
    return t0 + dt * np.arange(n + 1)


def rk4_step(fun, x, dt):
    """
    One step of the classic fourth-order Runge-Kutta method
    """
    k1 = fun(x)
    k2 = fun(x + 0.5 * dt * k1)
    k3 = fun(x + 0.5 * dt * k2)
    k4 = fun(x + dt * k3)
    return x + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate(spec, x0, t0, t1, dt):
    """
    Integrates spec from x0 over [t0, t1] with fixed-step RK4.

    Raises DivergenceError at the first step that produces a
    non-finite state.
    """
    x = np.asarray(x0, dtype = float).reshape(-1)
    if x.shape[0] != spec.dim:
        raise ValueError(f'x0 has length {x.shape[0]}, {spec.name} has dimension {spec.dim}')

    t = time_grid(t0, t1, dt)
    X = np.empty((spec.dim, t.shape[0]))
    X[:, 0] = x

    with np.errstate(over = 'ignore', invalid = 'ignore'):
        for n in range(1, t.shape[0]):
            x = rk4_step(spec.rhs, x, dt)
            if not np.all(np.isfinite(x)):
                raise DivergenceError(
                    f'{spec.name}: non-finite state at step {n} (t = {t[n]:.4g})', n
                )
            X[:, n] = x

    names = list(getattr(spec, "state_names", [])) or None
    return Trajectory(t, X, names = names)


def integrate_batch(spec, X0, t0, t1, dt):
    """
    Integrates B initial conditions (columns of X0) at once.

    Returns the time grid, a D x B x Q array of states and a boolean
    mask of the trajectories that stayed finite.  Diverged columns are
    frozen at NaN and no longer advanced.
    """
    X = np.array(X0, dtype = float)
    if X.ndim == 1:
        X = X[:, None]

    t = time_grid(t0, t1, dt)
    out = np.full((X.shape[0], X.shape[1], t.shape[0]), np.nan)
    out[:, :, 0] = X
    alive = np.all(np.isfinite(X), axis = 0)

    with np.errstate(over = 'ignore', invalid = 'ignore'):
        for n in range(1, t.shape[0]):
            if not np.any(alive):
                break
            X[:, alive] = rk4_step(spec.rhs, X[:, alive], dt)
            alive &= np.all(np.isfinite(X), axis = 0)
            out[:, alive, n] = X[:, alive]

    # a column that diverged part way keeps its finite prefix but is flagged
    if not np.all(alive):
        logger.warning("%s: %d of %d trajectories diverged", spec.name, np.sum(~alive), alive.size)

    return t, out, alive


def burn_in(spec, x0, duration, dt):
    """
    Integrates for the given duration and returns the final state,
    so that later sampling starts on the attractor
    """
    if duration <= 0:
        return np.asarray(x0, dtype = float)
    return integrate(spec, x0, 0.0, duration, dt).states[:, -1]


def attractor_box(spec, x0, duration = 100.0, dt = 0.01, margin = 0.1, transient = 10.0):
    """
    Per-dimension [min, max] of a long reference trajectory, widened by
    a relative margin on each side.  Returns a D x 2 array.
    """
    start = burn_in(spec, x0, transient, dt)
    traj = integrate(spec, start, 0.0, duration, dt)
    lo = traj.states.min(axis = 1)
    hi = traj.states.max(axis = 1)
    pad = margin * (hi - lo)
    return np.column_stack([lo - pad, hi + pad])
