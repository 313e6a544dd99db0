import logging

import numpy as np
from scipy.linalg import svdvals

from ..errors import UndefinedRankError
from ..rng import make_rng

logger = logging.getLogger(__name__)


def spectral_norm(J, iterations = 100, tol = 1e-10, seed = 0):
    """
    Largest singular value of J by power iteration on J^T J, started
    from a seeded random vector.  Stops early once the Rayleigh
    quotient changes by less than tol (relative).
    """
    J = np.atleast_2d(np.asarray(J, dtype = float))
    v = make_rng(seed).standard_normal(J.shape[1])
    v /= np.linalg.norm(v)

    lam = 0.0
    for _ in range(iterations):
        w = J.T @ (J @ v)
        norm = np.linalg.norm(w)
        if norm == 0:
            return 0.0
        v = w / norm
        lam_new = float(np.dot(J @ v, J @ v))
        if abs(lam_new - lam) <= tol * lam_new:
            lam = lam_new
            break
        lam = lam_new

    return float(np.sqrt(lam))


def check_layer(net, layer_k):
    if layer_k is None:
        layer_k = max(net.depth - 1, 1)
    if not 1 <= layer_k <= net.depth:
        raise ValueError(f'layer_k must lie in [1, {net.depth}], got {layer_k}')
    return layer_k


def estimate_lipschitz(net, samples, layer_k = None, iterations = 100, tol = 1e-10, seed = 0):
    """
    Largest spectral norm of the Jacobian of the first layer_k layers
    over a set of sample inputs.  This is a lower bound on the
    Lipschitz constant of that map.  layer_k defaults to the last
    hidden layer.
    """
    layer_k = check_layer(net, layer_k)
    J = net.input_jacobians(samples, layer = layer_k)

    best = 0.0
    for n in range(J.shape[2]):
        best = max(best, spectral_norm(J[:, :, n], iterations, tol, seed))
    return best


def lipschitz_upper_bound(net, layer_k = None):
    """
    Product of the layer spectral norms (input normalisation included)
    times sup |phi'| for each activation layer among the first layer_k
    """
    layer_k = check_layer(net, layer_k)
    bound = float(np.max(1 / np.abs(net.scale)))
    for l in range(layer_k):
        bound *= np.linalg.norm(net.weights[l], 2)
        if l < net.depth - 1:
            bound *= net.activation.sup_derivative()
    return float(bound)


def stable_rank(features):
    """
    ||F||_F^2 / ||F||_op^2 = sum_i sigma_i^2 / sigma_1^2
    """
    s = svdvals(np.atleast_2d(np.asarray(features, dtype = float)))
    if s.size == 0 or s[0] == 0:
        raise UndefinedRankError('stable rank of a zero matrix is undefined')
    return float(np.sum(s**2) / s[0]**2)
