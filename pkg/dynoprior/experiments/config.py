import logging
from dataclasses import dataclass, field

import yaml

from ..errors import ParameterError
from ..parameters.base_parameters import Parameters
from ..parameters.example_parameters import EXPERIMENT_PARAMETERS, DEFAULT_SYSTEMS

logger = logging.getLogger(__name__)

SECTIONS = ("experiment", "system", "seed", "output_dir", "physical", "computational")


@dataclass
class ExperimentConfig():
    """
    Everything needed to reproduce a run

    experiment: sindy, modes, embed, forecast, sweep or puc
    system:     catalog name (None for the system-free experiments)
    seed:       master seed; sub-runs derive their seeds from it
    output_dir: where CSVs, SVGs and the manifest are written
    parameters: Parameters object of the experiment
    """
    experiment: str
    system: str = None
    seed: int = 0
    output_dir: str = "results"
    parameters: Parameters = field(default = None)

    def __post_init__(self):
        if self.experiment not in EXPERIMENT_PARAMETERS:
            raise ParameterError(
                f'unknown experiment {self.experiment!r}; valid experiments are '
                f'{", ".join(EXPERIMENT_PARAMETERS)}'
            )
        if self.parameters is None:
            self.parameters = EXPERIMENT_PARAMETERS[self.experiment]()
        if self.system is None:
            self.system = DEFAULT_SYSTEMS[self.experiment]
        self.seed = int(self.seed)

    @classmethod
    def from_dict(cls, values):
        """
        Builds a config from flat sections: experiment, system, seed,
        output_dir, physical and computational.  Parameter sections
        may only change keys that the experiment defines.
        """
        unknown = set(values) - set(SECTIONS)
        if unknown:
            raise ParameterError(f'unknown config section(s): {", ".join(sorted(unknown))}')
        if "experiment" not in values:
            raise ParameterError('the config does not name an experiment')

        config = cls(
            values["experiment"],
            values.get("system"),
            values.get("seed", 0),
            values.get("output_dir", "results"),
        )
        config.parameters.update_all(values.get("physical") or {})
        config.parameters.update_all(values.get("computational") or {})
        return config

    @classmethod
    def from_yaml(cls, path):
        with open(path) as f:
            values = yaml.safe_load(f) or {}
        if not isinstance(values, dict):
            raise ParameterError(f'{path}: expected a mapping of config sections')
        logger.debug("Loaded config from %s", path)
        return cls.from_dict(values)

    def as_dict(self):
        out = {
            "experiment": self.experiment,
            "system": self.system,
            "seed": self.seed,
            "output_dir": str(self.output_dir),
        }
        out.update(self.parameters.as_dict())
        return out

    def to_yaml(self, path):
        with open(path, "w") as f:
            yaml.safe_dump(self.as_dict(), f, sort_keys = False)
