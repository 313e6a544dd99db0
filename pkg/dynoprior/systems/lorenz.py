from .base_system import DynamicalSystem, sp


class Lorenz(DynamicalSystem):
    """
    The three-dimensional Lorenz system with sigma = 10, rho = 28 and
    beta = 8/3.

    The published form of the third equation reads
    dz/dt = -xy - beta z, which differs in sign from the textbook
    system dz/dt = xy - beta z.  The canonical flag selects between
    the two; the published form diverges from generic initial
    conditions.
    """

    name = "lorenz3"

    def __init__(self, canonical = True):
        super().__init__()

        x, y, z = sp.symbols('x y z')
        sigma, rho, beta = sp.symbols('sigma rho beta')
        self.state = [x, y, z]
        self.canonical = canonical

        if canonical:
            dz = x * y - beta * z
        else:
            dz = -x * y - beta * z

        self.f = [
            sigma * (-x + y),
            -x * z + rho * x - y,
            dz
        ]

        self.defaults = {
            "sigma": 10.0,
            "rho": 28.0,
            "beta": 8 / 3
        }
