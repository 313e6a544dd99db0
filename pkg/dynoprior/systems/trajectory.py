from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen = True, eq = False)
class Trajectory():
    """
    Class for storing the output of an integration or a rollout

    times:      strictly increasing vector of length Q
    states:     D x Q array of states aligned with times
    diverged:   True when the run was cut short by a non-finite state
    diverged_at: index of the first bad step (None otherwise)
    """
    times: np.ndarray
    states: np.ndarray
    diverged: bool = False
    diverged_at: int = None
    names: list = field(default = None, compare = False)

    def __post_init__(self):
        times = np.asarray(self.times, dtype = float)
        states = np.atleast_2d(np.asarray(self.states, dtype = float))
        if states.shape[1] != times.shape[0]:
            raise ValueError(
                f'states have {states.shape[1]} columns but there are {times.shape[0]} times'
            )
        if times.shape[0] > 1 and np.any(np.diff(times) <= 0):
            raise ValueError('times must be strictly increasing')
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)

    @property
    def dim(self):
        return self.states.shape[0]

    def __len__(self):
        return self.times.shape[0]

    def trim(self, n):
        """
        Returns the first n columns, flagged as diverged at step n
        """
        return Trajectory(self.times[:n], self.states[:, :n], True, n, self.names)

    def project(self, components):
        """
        Returns the selected rows as a new array (a view for plotting;
        the stored trajectory is not altered)
        """
        return self.states[list(components), :].copy()

    def __str__(self):
        return (
            f'Trajectory with {self.dim} states and {len(self)} time points '
            f'on [{self.times[0]:.4g}, {self.times[-1]:.4g}]'
        )
