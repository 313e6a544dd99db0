from .base_system import DynamicalSystem, sp


class VanDerPol(DynamicalSystem):
    """
    Van der Pol oscillator in Lienard form with mu = 1
    """

    name = "vanderpol"

    def __init__(self):
        super().__init__()

        x, y = sp.symbols('x y')
        mu = sp.Symbol('mu')
        self.state = [x, y]

        self.f = [
            mu * (x - x**3 / 3 - y),
            x / mu
        ]

        self.defaults = {"mu": 1.0}
