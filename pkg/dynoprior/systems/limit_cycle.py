from .base_system import DynamicalSystem, sp


class LimitCycle(DynamicalSystem):
    """
    Planar system with the unit circle as a stable limit cycle.
    Substitute for the unnamed limit cycle attractor.
    """

    name = "limit_cycle"

    def __init__(self):
        super().__init__()

        x, y = sp.symbols('x y')
        self.state = [x, y]

        r2 = x**2 + y**2
        self.f = [
            -y + x * (1 - r2),
            x + y * (1 - r2)
        ]
