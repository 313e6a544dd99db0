import logging

from .lorenz import Lorenz
from .van_der_pol import VanDerPol
from .chen import Chen
from .rossler import Rossler
from .lorenz14 import Lorenz14
from .duffing import Duffing
from .limit_cycle import LimitCycle
from ..errors import CatalogError

logger = logging.getLogger(__name__)

SYSTEMS = {
    "lorenz3": Lorenz,
    "vanderpol": VanDerPol,
    "chen": Chen,
    "rossler": Rossler,
    "lorenz14": Lorenz14,
    "duffing": Duffing,
    "limit_cycle": LimitCycle,
}

# systems whose equations are substitutes for ones that are only named
SUBSTITUTES = ("duffing", "limit_cycle")


def catalog(name, params = None, canonical_lorenz = True):
    """
    Returns the named system, built with the published parameter
    values.  params overrides individual values.
    """
    if name not in SYSTEMS:
        raise CatalogError(
            f'unknown system {name!r}; valid names are {", ".join(sorted(SYSTEMS))}'
        )

    if name == "lorenz3":
        system = Lorenz(canonical = canonical_lorenz)
    else:
        system = SYSTEMS[name]()

    if name in SUBSTITUTES:
        logger.debug("%s uses substitute equations", name)

    return system.build(params)
