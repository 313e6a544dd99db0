from .hankel import HankelMatrix, hankel, hankel_shape, delay_hankel, RAW_WINDOW, SURROGATE_WINDOW
from .modes import ModeSpectrum, time_delay_modes, neural_modes, write_spectrum_csv
from .takens import (
    EmbeddingResult, SurrogateSeries, takens_reconstruct, surrogate_resample, write_embedding_csv
)
from .geometry import closed_curve_gap, procrustes_correlation, conic_residual, curve_diameter
