"""
Activation functions of the coordinate network.  Each activation is
an object that evaluates phi(z), its derivative phi'(z) and the
supremum of |phi'| (used for Lipschitz upper bounds).
"""
import numpy as np

from ..errors import ParameterError


class Activation():
    """
    Generic (super)class for an activation with bandwidth omega
    """

    kind = None
    tag = None
    default_omega = 1.0

    def __init__(self, omega = None):
        if omega is None:
            omega = self.default_omega
        omega = float(omega)
        if not omega > 0:
            raise ValueError(f'{self.kind}: omega must be positive, got {omega}')
        self.omega = omega

    def __call__(self, z):
        raise NotImplementedError

    def derivative(self, z):
        raise NotImplementedError

    def sup_derivative(self):
        """
        Returns sup |phi'(z)| over the real line
        """
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.omega == other.omega

    def __hash__(self):
        return hash((self.kind, self.omega))

    def __repr__(self):
        return f'{type(self).__name__}(omega={self.omega:g})'


class Sinc(Activation):
    """
    sinc(omega z) = sin(omega z) / (omega z), with the removable
    singularity at z = 0 evaluated from the Taylor series
    """

    kind = "sinc"
    tag = 0
    default_omega = 30.0

    # below this value of |omega z| the Taylor branch is used
    taylor_cutoff = 1e-4

    # max over u of |(u cos u - sin u) / u^2|, attained near u = 2.08
    slope_bound = 0.4365

    def __call__(self, z):
        u = self.omega * np.asarray(z, dtype = float)
        small = np.abs(u) < self.taylor_cutoff
        safe = np.where(small, 1.0, u)
        return np.where(small, 1 - u**2 / 6, np.sin(safe) / safe)

    def derivative(self, z):
        z = np.asarray(z, dtype = float)
        u = self.omega * z
        small = np.abs(u) < self.taylor_cutoff
        safe = np.where(small, 1.0, u)
        exact = self.omega * (safe * np.cos(safe) - np.sin(safe)) / safe**2
        return np.where(small, -self.omega**2 * z / 3, exact)

    def sup_derivative(self):
        return self.omega * self.slope_bound


class Gaussian(Activation):
    """
    exp(-z^2 / omega^2)
    """

    kind = "gaussian"
    tag = 1
    default_omega = 0.1

    def __call__(self, z):
        z = np.asarray(z, dtype = float)
        return np.exp(-z**2 / self.omega**2)

    def derivative(self, z):
        z = np.asarray(z, dtype = float)
        return -2 * z / self.omega**2 * np.exp(-z**2 / self.omega**2)

    def sup_derivative(self):
        # attained at z = omega / sqrt(2)
        return np.sqrt(2) * np.exp(-0.5) / self.omega


class Sine(Activation):
    """
    sin(omega z)
    """

    kind = "sine"
    tag = 2
    default_omega = 30.0

    def __call__(self, z):
        return np.sin(self.omega * np.asarray(z, dtype = float))

    def derivative(self, z):
        return self.omega * np.cos(self.omega * np.asarray(z, dtype = float))

    def sup_derivative(self):
        return self.omega


class ReLU(Activation):
    """
    max(z, 0).  omega is stored but has no effect; the derivative
    at the kink is taken to be 0.
    """

    kind = "relu"
    tag = 3
    default_omega = 1.0

    def __call__(self, z):
        return np.maximum(np.asarray(z, dtype = float), 0.0)

    def derivative(self, z):
        return (np.asarray(z, dtype = float) > 0).astype(float)

    def sup_derivative(self):
        return 1.0


ACTIVATIONS = {cls.kind: cls for cls in (Sinc, Gaussian, Sine, ReLU)}
TAGS = {cls.tag: cls for cls in (Sinc, Gaussian, Sine, ReLU)}


def make_activation(kind, omega = None):
    """
    Returns the activation of the given kind, e.g. make_activation("sinc", 30)
    """
    if isinstance(kind, Activation):
        return kind
    if kind not in ACTIVATIONS:
        raise ParameterError(
            f'unknown activation {kind!r}; valid kinds are {", ".join(sorted(ACTIVATIONS))}'
        )
    return ACTIVATIONS[kind](omega)
