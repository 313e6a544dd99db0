from .base_parameters import Parameters
from . import example_parameters
