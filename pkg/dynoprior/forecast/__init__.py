from .snapshots import SnapshotPairs, build_pairs, split_by_trajectory
from .dmd import DmdModel, fit_dmd
from .forecaster import (
    train_forecaster, rollout, one_step_rms, horizon_rms, inside_box, project,
    default_widths, write_comparison_csv
)
