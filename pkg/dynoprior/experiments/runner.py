import json
import logging
import os
import time
from dataclasses import dataclass, field, asdict

import numpy as np

from .embed import EmbedExperiment
from .experiment import sha256
from .forecast import ForecastExperiment
from .modes import ModesExperiment
from .puc import PucExperiment
from .sindy import SindyExperiment
from .sweep import SweepExperiment
from .. import __version__
from ..errors import DynopriorError

logger = logging.getLogger(__name__)

EXPERIMENTS = {
    cls.name: cls for cls in (
        SindyExperiment, ModesExperiment, EmbedExperiment,
        ForecastExperiment, SweepExperiment, PucExperiment
    )
}

MANIFEST = "manifest.json"


@dataclass
class RunManifest():
    """
    Record of a run

    config:     the effective (merged) configuration
    version:    package version
    duration:   wall-clock seconds
    files:      emitted files with their SHA-256 digests
    summary:    headline numbers of the experiment
    error:      "ErrorType: message" if the run failed, otherwise None
    """
    config: dict
    version: str = __version__
    duration: float = 0.0
    files: list = field(default_factory = list)
    summary: dict = field(default_factory = dict)
    error: str = None

    @property
    def ok(self):
        return self.error is None

    def to_json(self):
        return json.dumps(asdict(self), indent = 2, default = _jsonable)

    def write(self, path):
        with open(path, "w") as f:
            f.write(self.to_json() + "\n")


def _jsonable(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f'{type(value).__name__} is not JSON serialisable')


def run(config):
    """
    Executes the configured experiment and writes its manifest.

    Package errors do not propagate: they are recorded in the manifest
    and the files written before the failure are kept.  Any other
    exception is recorded the same way and then re-raised.
    """
    experiment = EXPERIMENTS[config.experiment](config)
    manifest = RunManifest(config.as_dict())

    logger.info("Running %s (system %s, seed %d)", config.experiment, config.system, config.seed)
    start = time.perf_counter()
    try:
        experiment.execute()
    except DynopriorError as err:
        manifest.error = f'{type(err).__name__}: {err}'
        logger.error("%s failed: %s", config.experiment, manifest.error)
    except Exception as err:
        manifest.error = f'{type(err).__name__}: {err}'
        logger.exception("%s crashed", config.experiment)
        raise
    finally:
        manifest.duration = time.perf_counter() - start
        manifest.files = experiment.file_records()
        manifest.summary = experiment.summary
        manifest.write(os.path.join(experiment.out, MANIFEST))

    return manifest


def verify(manifest, output_dir):
    """
    Re-reads every file listed in a manifest and checks its digest.
    Returns the list of files that are missing or changed.
    """
    bad = []
    for record in manifest.files:
        path = os.path.join(output_dir, record["path"])
        if not os.path.exists(path) or sha256(path) != record["sha256"]:
            bad.append(record["path"])
    return bad
