from .base_system import DynamicalSystem, sp


class Duffing(DynamicalSystem):
    """
    Unforced double-well Duffing oscillator

        dx/dt = y
        dy/dt = -delta y - alpha x - beta x^3

    with delta = 0.1, alpha = -1, beta = 1.  The experiments only name
    this system, so this is a substitute: the standard unforced form.
    """

    name = "duffing"

    def __init__(self):
        super().__init__()

        x, y = sp.symbols('x y')
        delta, alpha, beta = sp.symbols('delta alpha beta')
        self.state = [x, y]

        self.f = [
            y,
            -delta * y - alpha * x - beta * x**3
        ]

        self.defaults = {
            "delta": 0.1,
            "alpha": -1.0,
            "beta": 1.0
        }
