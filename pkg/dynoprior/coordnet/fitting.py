import logging

import numpy as np

from .network import init
from .training import train, TrainConfig

logger = logging.getLogger(__name__)


def normalization_for(inputs):
    """
    Per-dimension (shift, scale) mapping the range of the inputs onto
    [-1, 1].  Constant dimensions get scale 1.
    """
    X = np.atleast_2d(np.asarray(inputs, dtype = float))
    lo = X.min(axis = 1)
    hi = X.max(axis = 1)
    shift = (lo + hi) / 2
    scale = (hi - lo) / 2
    scale[scale == 0] = 1.0
    return shift, scale


def fold_output_scaling(net, mean, std):
    """
    Rewrites the last affine layer so that the network outputs
    std * y + mean instead of y
    """
    net.weights[-1] = std[:, None] * net.weights[-1]
    net.biases[-1] = std * net.biases[-1] + mean
    return net


def fit_signal(inputs, targets, widths, activation, cfg = None, seed = None):
    """
    Fits a coordinate network to a signal.

    The inputs are normalised to [-1, 1] and the targets are
    standardised during training.  The target scaling is folded back
    into the last layer so the returned network maps raw inputs to raw
    targets.  The loss history is in standardised units.

    seed defaults to cfg.seed and controls the initial weights.
    """
    if cfg is None:
        cfg = TrainConfig()

    X = np.atleast_2d(np.asarray(inputs, dtype = float))
    T = np.atleast_2d(np.asarray(targets, dtype = float))

    widths = list(widths)
    if widths[0] != X.shape[0] or widths[-1] != T.shape[0]:
        raise ValueError(
            f'widths {widths} do not match {X.shape[0]} inputs and {T.shape[0]} outputs'
        )

    shift, scale = normalization_for(X)
    mean = T.mean(axis = 1)
    std = T.std(axis = 1)
    std[std == 0] = 1.0

    net = init(widths, activation, cfg.seed if seed is None else seed, shift, scale)
    net, history = train(net, X, (T - mean[:, None]) / std[:, None], cfg)

    logger.info("Fitted %s network to %d samples", net.activation.kind, X.shape[1])

    return fold_output_scaling(net, mean, std), history
