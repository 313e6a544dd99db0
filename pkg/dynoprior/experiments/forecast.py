import logging

import numpy as np

from .experiment import Experiment
from ..errors import DivergenceError, ParameterError
from ..forecast.dmd import fit_dmd
from ..forecast.forecaster import (
    train_forecaster, rollout, one_step_rms, horizon_rms, inside_box, write_comparison_csv
)
from ..forecast.snapshots import build_pairs, split_by_trajectory
from ..rng import make_rng
from ..systems.integrator import attractor_box, integrate
from ..systems.io import save_trajectory

logger = logging.getLogger(__name__)

MODELS = ("net", "dmd", "both")


class ForecastExperiment(Experiment):
    """
    Trains a next-state network and a DMD model on snapshot pairs of
    many trajectories, compares their k-step-ahead errors on held-out
    trajectories and rolls both forward from a chosen start
    """

    name = "forecast"

    def start(self, spec, box):
        kind = self.pars.physical["x0"]
        centre = box.mean(axis = 1)
        half = (box[:, 1] - box[:, 0]) / 2
        if kind == "inbounds":
            return make_rng(self.seed).uniform(box[:, 0], box[:, 1])
        if kind == "far":
            return centre + self.pars["far_factor"] * half
        raise ParameterError(f'unknown rollout start {kind!r}; use inbounds or far')

    def execute(self):
        which = self.pars["model"]
        if which not in MODELS:
            raise ParameterError(f'unknown model {which!r}; use net, dmd or both')

        spec = self.system()
        dt = self.pars["dt"]
        box = attractor_box(
            spec, np.ones(spec.dim), self.pars["box_duration"], dt, self.pars["box_margin"]
        )

        pairs = build_pairs(spec, self.pars["ntraj"], self.pars["nsnap"], dt, box, self.seed)
        train, test = split_by_trajectory(pairs, self.pars["holdout"], self.seed)
        train_box = train.bounding_box()
        self.summary["pairs"] = len(pairs)
        self.summary["skipped_trajectories"] = pairs.skipped

        models = {}
        if which in ("net", "both"):
            models["network"] = train_forecaster(
                train, self.widths(spec.dim, spec.dim), self.activation(), self.train_config(self.seed)
            )
        if which in ("dmd", "both"):
            models["dmd"] = fit_dmd(train, self.pars["dmd_rank"])

        horizon = self.pars["horizon"]
        errors = {}
        for key, model in models.items():
            errors[key] = horizon_rms(model, test, horizon)
            self.summary[f'{key}_one_step_rms'] = one_step_rms(model, test)
            self.summary[f'{key}_horizon_rms'] = float(errors[key][-1])

        if len(errors) == 2:
            self.emit("forecast_comparison.csv", write_comparison_csv, errors["network"], errors["dmd"])

        x0 = self.start(spec, box)
        steps = self.pars["steps"]
        series = []
        i, j = self.pars["plot_components"]

        try:
            truth = integrate(spec, x0, 0.0, steps * dt, dt)
            self.emit("forecast_truth.csv", save_trajectory, truth)
            series.append(("truth", truth.states[i], truth.states[j]))
        except DivergenceError as err:
            logger.warning("reference trajectory diverged at step %d", err.step)

        for key, model in models.items():
            traj = rollout(model, x0, steps, dt)
            self.emit(f'forecast_rollout_{key}.csv', save_trajectory, traj)
            inside = inside_box(traj, train_box)
            self.summary[f'{key}_diverged'] = traj.diverged
            self.summary[f'{key}_stays_in_box'] = bool(np.all(inside))
            entered = np.flatnonzero(inside)
            self.summary[f'{key}_first_step_in_box'] = int(entered[0]) if entered.size else None
            series.append((key, traj.states[i], traj.states[j]))

        self.plot(
            "forecast_rollout.svg", series, "line",
            title = f'{spec.name}: rollout from {self.pars.physical["x0"]} start',
            xlabel = spec.state_names[i], ylabel = spec.state_names[j]
        )
