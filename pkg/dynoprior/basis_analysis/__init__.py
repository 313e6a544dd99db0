from .partition import (
    PartitionResidual, partition_residual, riesz_ratio, sine_periodic_fit, write_residual_csv
)
from .lipschitz import (
    spectral_norm, estimate_lipschitz, lipschitz_upper_bound, stable_rank
)
from .sweep import SweepResult, omega_sweep, write_sweep_csv
from .nyquist import nyquist_sample_count, nyquist_ratio
