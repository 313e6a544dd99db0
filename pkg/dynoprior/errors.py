"""
Exceptions raised by dynoprior.  Everything derives from
DynopriorError so callers (e.g. the experiment runner) can
catch package failures in one place.
"""


class DynopriorError(Exception):
    """Base class for all package errors"""


class ParameterError(DynopriorError):
    """Unknown parameter or invalid configuration"""


class CatalogError(DynopriorError):
    """Unknown system name"""


class MissingParameterError(DynopriorError):
    """A right-hand side reads a parameter that was not assigned"""


class DivergenceError(DynopriorError):
    """The integrated state became non-finite"""

    def __init__(self, message, step):
        super().__init__(message)
        self.step = step


class EmptySampleError(DynopriorError):
    """A sampling or pairing operation produced no data"""


class TrainingDivergedError(DynopriorError):
    """The training loss became non-finite"""

    def __init__(self, message, iteration):
        super().__init__(message)
        self.iteration = iteration


class DeserializationError(DynopriorError):
    """Malformed network byte stream"""


class UndefinedRankError(DynopriorError):
    """Stable rank requested for a zero matrix"""


class UnsupportedSpacingError(DynopriorError):
    """The estimator needs uniformly spaced samples"""


class DegenerateModelError(DynopriorError):
    """Sparse regression removed every candidate term"""


class HankelSizeError(DynopriorError):
    """Series too short for the requested Hankel shape"""


class UntrustedFeaturesError(DynopriorError):
    """The network does not reconstruct its signal well enough"""


class PlotError(DynopriorError):
    """Invalid plot data"""
