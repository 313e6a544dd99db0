from .base_system import DynamicalSystem, sp


class Rossler(DynamicalSystem):
    """
    Rossler system with a = 0.2, b = 0.2 and c = 5.7
    """

    name = "rossler"

    def __init__(self):
        super().__init__()

        x, y, z = sp.symbols('x y z')
        a, b, c = sp.symbols('a b c')
        self.state = [x, y, z]

        self.f = [
            -(y + z),
            x + a * y,
            b + z * (x - c)
        ]

        self.defaults = {
            "a": 0.2,
            "b": 0.2,
            "c": 5.7
        }
