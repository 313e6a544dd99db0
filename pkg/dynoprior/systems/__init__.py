from .base_system import DynamicalSystem
from .lorenz import Lorenz
from .van_der_pol import VanDerPol
from .chen import Chen
from .rossler import Rossler
from .lorenz14 import Lorenz14
from .duffing import Duffing
from .limit_cycle import LimitCycle
from .custom import CustomSystem, linear_system, exponential_decay
from .catalog import catalog, SYSTEMS, SUBSTITUTES
from .trajectory import Trajectory
from .integrator import time_grid, rk4_step, integrate, integrate_batch, burn_in, attractor_box
from .sampling import SampleSet, Uniform, Random, Decimated, sample
from .coefficients import true_coefficients
from . import io
