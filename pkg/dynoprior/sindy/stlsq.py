import logging
from dataclasses import dataclass

import numpy as np
import sympy as sp

from .library import CandidateLibrary
from ..errors import DegenerateModelError
from ..systems.custom import CustomSystem
from ..systems.integrator import integrate

logger = logging.getLogger(__name__)


@dataclass(eq = False)
class SindyModel():
    """
    A sparse model dx/dt = Gamma^T theta(x)

    library:        the candidate terms theta
    gamma:          Q x D coefficient matrix
    threshold:      coefficients below this magnitude were removed
    ridge_lambda:   ridge regulariser used in each least-squares solve
    """
    library: CandidateLibrary
    gamma: np.ndarray
    threshold: float
    ridge_lambda: float

    def rhs(self, X):
        """
        Evaluates the learned right-hand side at a state (D,) or
        batch of states (D, N)
        """
        X = np.asarray(X, dtype = float)
        Theta = self.library.evaluate(X)
        return Theta @ self.gamma if X.ndim == 1 else (Theta @ self.gamma).T

    def expressions(self):
        """
        The learned right-hand side as SymPy expressions
        """
        return [
            sp.Add(*[sp.Float(g) * t for g, t in zip(self.gamma[:, d], self.library.terms) if g != 0])
            for d in range(self.library.dim)
        ]

    def to_system(self, name = "sindy"):
        """
        The learned model as an integrable system
        """
        return CustomSystem(name, self.library.symbols, self.expressions()).build()

    def support(self):
        return self.gamma != 0


def ridge_solve(Theta, y, ridge_lambda):
    """
    Minimises ||Theta xi - y||^2 + lambda ||xi||^2 through the
    augmented least-squares system
    """
    Q = Theta.shape[1]
    A = np.vstack([Theta, np.sqrt(ridge_lambda) * np.eye(Q)])
    b = np.concatenate([y, np.zeros(Q)])
    xi, *_ = np.linalg.lstsq(A, b, rcond = None)
    return xi


def stlsq(Theta, ydot, threshold = 0.1, ridge_lambda = 1e-6, max_rounds = 20):
    """
    Sequentially thresholded ridge regression.

    Theta is N x Q and ydot is N x D.  For every output the ridge
    solution is computed on the active terms, terms with magnitude
    below threshold are removed, and the solve is repeated until the
    active set stops changing.
    """
    N, Q = Theta.shape
    D = ydot.shape[1]
    Gamma = np.zeros((Q, D))

    for d in range(D):
        y = ydot[:, d]
        active = np.ones(Q, dtype = bool)
        xi = np.zeros(Q)

        for _ in range(max_rounds):
            xi = np.zeros(Q)
            xi[active] = ridge_solve(Theta[:, active], y, ridge_lambda)
            small = active & (np.abs(xi) < threshold)
            if not np.any(small):
                break
            active &= ~small
            if not np.any(active):
                break

        # no further solve after the last pruning
        xi[np.abs(xi) < threshold] = 0.0

        if not np.any(xi != 0) and np.any(y != 0):
            raise DegenerateModelError(
                f'all candidate terms were eliminated for output {d} '
                f'(threshold {threshold}); try a lower threshold'
            )

        Gamma[:, d] = xi

    return Gamma


def fit(samples, ydot, d_max = 2, threshold = 0.1, ridge_lambda = 1e-6, names = None, max_rounds = 20):
    """
    Fits a sparse model to sampled states and derivative estimates.

    samples supplies the states (one row per observed component) and
    ydot the matching DerivativeEstimate.  Library columns are not
    normalised, so coefficients are directly comparable to those of
    the governing equations.
    """
    if threshold < 0:
        raise ValueError('threshold must be non-negative')

    X = samples.values
    Ydot = ydot.ydot
    if X.shape != Ydot.shape:
        raise ValueError(f'samples have shape {X.shape} but derivatives have shape {Ydot.shape}')

    library = CandidateLibrary(X.shape[0], d_max, names)
    Theta = library.evaluate(X)
    Gamma = stlsq(Theta, Ydot.T, threshold, ridge_lambda, max_rounds)

    logger.info("Sparse regression kept %d of %d terms", int(np.sum(Gamma != 0)), Gamma.size)

    return SindyModel(library, Gamma, threshold, ridge_lambda)


def simulate_model(model, x0, t0, t1, dt):
    """
    Integrates the learned model with the same RK4 scheme used for the
    catalog systems
    """
    return integrate(model.to_system(), x0, t0, t1, dt)


def coefficient_error(model, truth):
    """
    Relative Frobenius error ||Gamma - Gamma*|| / ||Gamma*||
    """
    gamma = model.gamma if isinstance(model, SindyModel) else np.asarray(model)
    truth = np.asarray(truth, dtype = float)
    return float(np.linalg.norm(gamma - truth) / np.linalg.norm(truth))
