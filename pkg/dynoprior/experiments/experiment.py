import hashlib
import logging
import os

import numpy as np

from .plotting import render_plot
from ..coordnet.activations import make_activation
from ..coordnet.training import TrainConfig
from ..rng import spawn_seeds
from ..systems.catalog import catalog
from ..systems.integrator import burn_in, integrate

logger = logging.getLogger(__name__)


def sha256(path):
    with open(path, "rb") as f:
        return hashlib.sha256(f.read()).hexdigest()


class Experiment():
    """
    Superclass that contains common attributes and methods for the
    experiment subclasses.

    A subclass implements execute(), writing its outputs through
    self.emit so that every file ends up in the run manifest, and
    storing headline numbers in self.summary.
    """

    name = None

    def __init__(self, config):
        """
        Constructor
        """
        self.config = config
        self.pars = config.parameters
        self.seed = config.seed
        self.out = str(config.output_dir)
        self.files = []
        self.summary = {}

        os.makedirs(self.out, exist_ok = True)

    def execute(self):
        raise NotImplementedError

    def emit(self, filename, writer, *args, **kwargs):
        """
        Calls writer(path, *args, **kwargs) for a file in the output
        directory and records the file
        """
        path = os.path.join(self.out, filename)
        writer(path, *args, **kwargs)
        self.files.append(path)
        return path

    def file_records(self):
        """
        (path, sha256) for every emitted file that exists
        """
        return [
            {"path": os.path.relpath(p, self.out), "sha256": sha256(p)}
            for p in self.files if os.path.exists(p)
        ]

    def system(self):
        """
        Builds the configured catalog system
        """
        return catalog(
            self.config.system,
            self.pars.physical.get("system_params") or None,
            self.pars.physical.get("canonical_lorenz", True),
        )

    def initial_state(self, spec):
        x0 = self.pars.physical.get("x0")
        if x0 is None or isinstance(x0, str):
            return np.ones(spec.dim)
        return np.asarray(x0, dtype = float)

    def reference_trajectory(self, spec, t_end, dt):
        """
        Integrates from the configured initial state after discarding
        the burn-in transient
        """
        start = burn_in(spec, self.initial_state(spec), self.pars["burn_in"], dt)
        return integrate(spec, start, 0.0, t_end, dt)

    def activation(self):
        return make_activation(self.pars["activation"], self.pars.computational.get("omega"))

    def widths(self, n_in, n_out):
        width = self.pars["width"]
        depth = self.pars["depth"]
        return [n_in] + [width] * (depth - 1) + [n_out]

    def train_config(self, seed):
        comp = self.pars.computational
        return TrainConfig(
            iterations = comp["iterations"],
            learning_rate = comp["learning_rate"],
            batch = comp.get("batch") or "full",
            seed = seed,
            loss_log_stride = comp.get("loss_log_stride", 1),
            lr_decay = comp.get("lr_decay", 1.0),
        )

    def sub_seeds(self, count):
        return spawn_seeds(self.seed, count)

    def plot(self, filename, series, style, **kwargs):
        """
        Renders an SVG into the output directory
        """
        return self.emit(filename, lambda path: render_plot(series, style, path, **kwargs))
