from .base_system import DynamicalSystem, sp


class Chen(DynamicalSystem):
    """
    Chen system with alpha = 5, beta = -10 and delta = -0.38
    """

    name = "chen"

    def __init__(self):
        super().__init__()

        x, y, z = sp.symbols('x y z')
        alpha, beta, delta = sp.symbols('alpha beta delta')
        self.state = [x, y, z]

        self.f = [
            alpha * x - y * z,
            beta * y + x * z,
            delta * z + x * y / 3
        ]

        self.defaults = {
            "alpha": 5.0,
            "beta": -10.0,
            "delta": -0.38
        }
