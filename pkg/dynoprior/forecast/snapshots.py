import logging
from dataclasses import dataclass

import numpy as np

from ..errors import EmptySampleError
from ..rng import make_rng
from ..systems.integrator import integrate_batch

logger = logging.getLogger(__name__)


@dataclass(frozen = True, eq = False)
class SnapshotPairs():
    """
    Class for storing consecutive-state pairs

    x1:             D x M current states
    x2:             D x M states one step dt later
    dt:             time step between x1 and x2
    trajectory_ids: the trajectory each column comes from
    skipped:        number of trajectories dropped because they diverged
    """
    x1: np.ndarray
    x2: np.ndarray
    dt: float
    trajectory_ids: np.ndarray
    skipped: int = 0

    def __post_init__(self):
        if self.x1.shape != self.x2.shape:
            raise ValueError(f'x1 has shape {self.x1.shape} but x2 has shape {self.x2.shape}')
        if self.trajectory_ids.shape[0] != self.x1.shape[1]:
            raise ValueError('one trajectory id is needed per pair')

    @property
    def dim(self):
        return self.x1.shape[0]

    def __len__(self):
        return self.x1.shape[1]

    def select(self, mask):
        return SnapshotPairs(self.x1[:, mask], self.x2[:, mask], self.dt, self.trajectory_ids[mask], self.skipped)

    def trajectories(self):
        """
        Yields (id, D x T state sequence) for every trajectory
        """
        for j in np.unique(self.trajectory_ids):
            cols = np.flatnonzero(self.trajectory_ids == j)
            yield j, np.column_stack([self.x1[:, cols], self.x2[:, cols[-1]]])

    def bounding_box(self):
        """
        Per-dimension [min, max] over all states, a D x 2 array
        """
        X = np.hstack([self.x1, self.x2])
        return np.column_stack([X.min(axis = 1), X.max(axis = 1)])


def build_pairs(spec, n_traj, n_snapshots, dt, init_box, seed = 0):
    """
    Integrates n_traj trajectories of n_snapshots states each from
    initial points drawn uniformly in init_box (D x 2) and stacks their
    consecutive pairs.  Trajectories that diverge are skipped.
    """
    if n_traj < 1 or n_snapshots < 1:
        raise ValueError('n_traj and n_snapshots must be positive')
    if n_snapshots == 1:
        raise EmptySampleError('a single snapshot per trajectory gives no pairs')

    box = np.asarray(init_box, dtype = float)
    if box.shape != (spec.dim, 2):
        raise ValueError(f'init_box must have shape ({spec.dim}, 2)')

    rng = make_rng(seed)
    X0 = rng.uniform(box[:, 0], box[:, 1], size = (n_traj, spec.dim)).T

    _, states, alive = integrate_batch(spec, X0, 0.0, (n_snapshots - 1) * dt, dt)

    keep = np.flatnonzero(alive)
    skipped = n_traj - keep.size
    if skipped:
        logger.warning("%s: skipped %d diverging trajectories", spec.name, skipped)
    if keep.size == 0:
        raise EmptySampleError('every trajectory diverged')

    x1 = np.hstack([states[:, j, :-1] for j in keep])
    x2 = np.hstack([states[:, j, 1:] for j in keep])
    ids = np.repeat(keep, n_snapshots - 1)

    logger.info("Built %d pairs from %d trajectories", x1.shape[1], keep.size)

    return SnapshotPairs(x1, x2, float(dt), ids, int(skipped))


def split_by_trajectory(pairs, fraction = 0.1, seed = 0):
    """
    Holds out whole trajectories: returns (train, test) pairs with
    about fraction of the trajectories in the test set
    """
    if not 0 < fraction < 1:
        raise ValueError('fraction must lie in (0, 1)')

    ids = np.unique(pairs.trajectory_ids)
    if ids.size < 2:
        raise ValueError('a split needs at least two trajectories')

    n_test = min(ids.size - 1, max(1, int(round(fraction * ids.size))))
    test_ids = make_rng(seed).choice(ids, size = n_test, replace = False)
    test = np.isin(pairs.trajectory_ids, test_ids)

    return pairs.select(~test), pairs.select(test)
