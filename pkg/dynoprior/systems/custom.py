from .base_system import DynamicalSystem, sp


class CustomSystem(DynamicalSystem):
    """
    A system with a user-supplied right-hand side.

    state:      list of SymPy symbols (or names)
    f:          list of SymPy expressions in the state symbols and
                parameter symbols
    defaults:   values of the parameter symbols
    """

    def __init__(self, name, state, f, defaults = None):
        super().__init__()

        self.name = name
        self.state = [sp.Symbol(s) if isinstance(s, str) else s for s in state]
        self.f = [sp.sympify(e) for e in f]
        self.defaults = dict(defaults or {})

        if len(self.f) != len(self.state):
            raise ValueError(f'{name}: {len(self.f)} equations for {len(self.state)} states')


def linear_system(matrix, name = "linear"):
    """
    Builds dx/dt = A x for a constant matrix A
    """
    A = sp.Matrix(matrix)
    state = list(sp.symbols(f'x0:{A.shape[0]}'))
    f = list(A * sp.Matrix(state))
    return CustomSystem(name, state, f).build()


def exponential_decay(rate = 1.0):
    """
    The scalar test system dx/dt = -k x
    """
    x = sp.Symbol('x')
    k = sp.Symbol('k')
    return CustomSystem("decay", [x], [-k * x], {"k": rate}).build()
