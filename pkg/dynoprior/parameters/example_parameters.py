from .base_parameters import Parameters


class SindyParameters(Parameters):
    """
    Equation discovery from sampled states.  1000 samples at an
    interval of 0.1 on [0, 100], 4-layer width-256 sinc networks over
    6 s windows for the derivatives and a degree-2 library.
    """
    def __init__(self):

        super().__init__()

        """
        Physical parameters
        """
        self.physical = {
            "system_params": {},        # overrides of the system coefficients
            "canonical_lorenz": True,   # textbook sign of the z equation
            "x0": None,                 # initial state (defaults to all ones)
            "noise": [0.0, 0.25, 0.5, 1.0],  # noise amplitudes n of U(-n, n)
        }

        """
        Computational parameters
        """
        self.computational = {
            "t_end": 100.0,             # sampled time span [0, t_end)
            "integration_dt": 0.01,     # RK4 step
            "sample_dt": 0.1,           # sampling interval
            "burn_in": 10.0,            # discarded transient
            "deriv": "network",         # fd, spectral or network
            "d_max": 2,                 # library degree
            "threshold": 0.1,           # STLSQ threshold
            "ridge_lambda": 1e-6,       # STLSQ ridge term
            "activation": "sinc",
            "omega": 30.0,
            "width": 256,
            "depth": 4,
            "iterations": 2000,
            "learning_rate": 1e-3,
            "lr_decay": 0.1,
            "window": 6.0,              # time span covered by each network
            "margin": 1.5,              # extra training span on both sides of a window
            "simulate_t": 2.0,          # horizon of the model/truth comparison
        }


class ModesParameters(Parameters):
    """
    Mode counting from one observed component (5000 samples), by
    time-delay decomposition and by neural decomposition with a
    4-layer width-20 network
    """
    def __init__(self):

        super().__init__()

        self.physical = {
            "system_params": {},
            "canonical_lorenz": True,
            "x0": None,
            "observed": 0,              # index of the observed component
            "noise": 0.0,
        }

        self.computational = {
            "method": "both",           # tdd, nd or both
            "samples": 5000,
            "t_end": 5.0,
            "integration_dt": 0.001,
            "burn_in": 10.0,
            "window": 0.1,              # Hankel delay window n tau
            "ratio": 0.02,              # dominance ratio
            "gate": 1e-4,               # reconstruction gate for nd
            "activation": "sinc",
            "omega": 30.0,
            "width": 20,
            "depth": 4,
            "iterations": 20000,
            "learning_rate": 3e-3,
            "lr_decay": 0.01,
        }


class EmbedParameters(Parameters):
    """
    Attractor reconstruction from one observed component, 4000 samples
    on [0, 40], with or without a network surrogate
    """
    def __init__(self):

        super().__init__()

        self.physical = {
            "system_params": {},
            "canonical_lorenz": True,
            "x0": None,
            "observed": 0,
            "noise": 0.0,
            "spacing": "uniform",       # uniform, random or sparse
        }

        self.computational = {
            "pipeline": "surrogate",    # raw or surrogate
            "samples": 4000,
            "t_end": 40.0,
            "integration_dt": 0.005,
            "burn_in": 10.0,
            "sparse_factor": 2,         # interval multiplier for sparse spacing
            "raw_window": 0.1,
            "surrogate_window": 0.2,
            "k": 2,                     # embedding dimension
            "activation": "sinc",
            "omega": 30.0,
            "width": 128,
            "depth": 4,
            "iterations": 5000,
            "learning_rate": 1e-3,
            "lr_decay": 0.1,
        }


class ForecastParameters(Parameters):
    """
    Next-state prediction: 20 trajectories of 800 snapshots at
    dt = 0.01, a 4-layer width-256 sinc network and a DMD baseline
    """
    def __init__(self):

        super().__init__()

        self.physical = {
            "system_params": {},
            "canonical_lorenz": True,
            "x0": "inbounds",           # inbounds or far rollout start
        }

        self.computational = {
            "ntraj": 20,
            "nsnap": 800,
            "dt": 0.01,
            "model": "both",            # net, dmd or both
            "steps": 1000,
            "horizon": 10,              # k-step-ahead comparison
            "holdout": 0.1,             # fraction of trajectories held out
            "box_margin": 0.1,
            "box_duration": 100.0,
            "far_factor": 3.0,          # far start at this multiple of the box half-width
            "dmd_rank": None,
            "activation": "sinc",
            "omega": 30.0,
            "width": 256,
            "depth": 4,
            "iterations": 5000,
            "learning_rate": 1e-3,
            "batch": 1024,
            "loss_log_stride": 50,
            "plot_components": [0, 1],
        }


class SweepParameters(Parameters):
    """
    Lipschitz estimate and stable rank against omega at initialisation
    """
    def __init__(self):

        super().__init__()

        self.physical = {}

        self.computational = {
            "activation": "sinc",
            "omegas": [5.0, 10.0, 20.0, 40.0],
            "seeds": [0, 1, 2, 3, 4],
            "width": 256,
            "depth": 4,
            "n_samples": 512,           # inputs on [-1, 1]
            "layer": None,              # defaults to the last hidden layer
        }


class PucParameters(Parameters):
    """
    Partition-of-unity residuals of the generators, and truncated
    sine/cosine fits for the sine activation
    """
    def __init__(self):

        super().__init__()

        self.physical = {}

        self.computational = {
            "activation": "sinc",
            "omega": 1.0,               # used by the gaussian
            "K": 5000,
            "K_values": [100, 1000, 5000],
            "grid_points": 64,
            "riesz_K": 200,
            "n_terms": 10,              # largest truncation for the sine fit
            "signal_points": 1024,
        }


EXPERIMENT_PARAMETERS = {
    "sindy": SindyParameters,
    "modes": ModesParameters,
    "embed": EmbedParameters,
    "forecast": ForecastParameters,
    "sweep": SweepParameters,
    "puc": PucParameters,
}

DEFAULT_SYSTEMS = {
    "sindy": "lorenz3",
    "modes": "chen",
    "embed": "vanderpol",
    "forecast": "lorenz3",
    "sweep": None,
    "puc": None,
}
