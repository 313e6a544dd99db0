from .config import ExperimentConfig
from .experiment import Experiment
from .runner import RunManifest, run, verify, EXPERIMENTS
from .plotting import render_plot
from .cli import main
