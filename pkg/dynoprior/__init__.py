__version__ = "0.1.0"

from . import errors
from . import systems
from . import coordnet
from . import basis_analysis
from . import sindy
from . import delay_embed
from . import forecast
from . import parameters
from . import experiments
