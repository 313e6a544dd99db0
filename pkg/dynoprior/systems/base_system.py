import numpy as np
import sympy as sp

from ..errors import MissingParameterError


class DynamicalSystem():
    """
    Generic (super)class for an autonomous system dx/dt = f(x, alpha).

    Subclasses define the right-hand side symbolically: they set
    self.state (a list of SymPy symbols), self.f (a list of SymPy
    expressions, one per state component) and self.defaults (a dict
    mapping parameter names to their published values).  The
    build method then substitutes the parameter values and turns the
    expressions into a vectorised NumPy function.

    The rhs accepts a state of shape (D,) or (D, B) and returns an
    array of the same shape.
    """

    name = "system"

    def __init__(self):
        self.state = []
        self.f = []
        self.defaults = {}
        self.params = {}
        self.state_names = []

    @property
    def dim(self):
        return len(self.state)

    def build(self, params = None):
        """
        Assigns parameter values (defaults overridden by params) and
        lambdifies the symbolic model
        """
        values = dict(self.defaults)
        if params:
            values.update(params)
        self.params = values
        if not self.state_names:
            self.state_names = [str(s) for s in self.state]

        self.lambdify(values)
        return self

    def parameter_symbols(self):
        """
        Returns the set of symbols in f that are not state variables
        """
        symbols = set()
        for expr in self.f:
            symbols |= sp.sympify(expr).free_symbols
        return symbols - set(self.state)

    def substituted(self, params = None):
        """
        Returns the right-hand side with parameter values substituted.
        Every parameter that f reads must be assigned.
        """
        if params is None:
            params = self.params

        missing = sorted(str(s) for s in self.parameter_symbols() if str(s) not in params)
        if missing:
            raise MissingParameterError(
                f'{self.name}: no value for parameter(s) {", ".join(missing)}'
            )

        subs = {s: params[str(s)] for s in self.parameter_symbols()}
        return [sp.sympify(expr).subs(subs) for expr in self.f]

    def lambdify(self, params):
        """
        Converts the SymPy expressions into a single NumPy function
        """
        exprs = self.substituted(params)
        self.exprs = exprs
        self._num_f = [sp.lambdify([self.state], e, "numpy") for e in exprs]

    def rhs(self, x):
        """
        Numerically evaluates f at the state(s) x
        """
        x = np.asarray(x, dtype=float)
        if x.shape[0] != self.dim:
            raise ValueError(f'{self.name}: expected state of length {self.dim}, got {x.shape[0]}')

        # constant components come back as scalars and have to be broadcast
        shape = x.shape[1:]
        return np.stack([
            np.broadcast_to(np.asarray(fun(x), dtype=float), shape) for fun in self._num_f
        ])

    def __repr__(self):
        return f'{type(self).__name__}(name={self.name!r}, dim={self.dim}, params={self.params})'
