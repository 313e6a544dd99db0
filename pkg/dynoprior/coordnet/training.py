import logging
from dataclasses import dataclass

import numpy as np

from ..errors import TrainingDivergedError
from ..rng import make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen = True)
class TrainConfig():
    """
    Options for training a coordinate network with Adam

    iterations:         number of optimiser steps
    learning_rate:      Adam step size
    batch:              "full" or the number of columns drawn per step
    seed:               seed for minibatch selection
    loss_log_stride:    the loss is recorded every loss_log_stride steps
    lr_decay:           ratio of the final to the initial learning rate;
                        the rate decays exponentially in between
    """
    iterations: int = 5000
    learning_rate: float = 1e-4
    batch: object = "full"
    seed: int = 0
    loss_log_stride: int = 1
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    lr_decay: float = 1.0

    def __post_init__(self):
        if not self.iterations > 0:
            raise ValueError('iterations must be positive')
        if not self.learning_rate > 0:
            raise ValueError('learning_rate must be positive')
        if self.loss_log_stride < 1:
            raise ValueError('loss_log_stride must be at least 1')
        if not 0 < self.lr_decay <= 1:
            raise ValueError('lr_decay must lie in (0, 1]')
        if self.batch != "full" and not (isinstance(self.batch, (int, np.integer)) and self.batch > 0):
            raise ValueError(f'batch must be "full" or a positive integer, got {self.batch!r}')


def loss_and_gradients(net, inputs, targets):
    """
    Returns the mean squared error of the network over all outputs and
    columns together with its gradients with respect to every weight
    matrix and bias vector (backpropagation).
    """
    X = np.atleast_2d(np.asarray(inputs, dtype = float))
    T = np.atleast_2d(np.asarray(targets, dtype = float))
    if X.shape[1] != T.shape[1]:
        raise ValueError(f'{X.shape[1]} inputs but {T.shape[1]} targets')

    Z, F = net.layers(net.normalize(X))
    R = F[-1] - T
    loss = np.mean(R**2)

    grads_W = [None] * net.depth
    grads_b = [None] * net.depth

    delta = 2 * R / R.size
    for l in reversed(range(net.depth)):
        grads_W[l] = delta @ F[l].T
        grads_b[l] = delta.sum(axis = 1)
        if l > 0:
            delta = (net.weights[l].T @ delta) * net.activation.derivative(Z[l - 1])

    return loss, grads_W, grads_b


def mse(net, inputs, targets):
    return float(np.mean((net.forward(inputs) - np.atleast_2d(targets))**2))


def train(net, inputs, targets, cfg = None):
    """
    Trains a copy of net on (inputs, targets) with Adam.

    The parameters with the lowest full-batch loss seen during training
    are returned, so the final loss never exceeds the initial one.
    Returns the trained network and the list of recorded losses.
    """
    if cfg is None:
        cfg = TrainConfig()

    X = np.atleast_2d(np.asarray(inputs, dtype = float))
    T = np.atleast_2d(np.asarray(targets, dtype = float))
    if X.shape[1] != T.shape[1]:
        raise ValueError(f'{X.shape[1]} inputs but {T.shape[1]} targets')
    N = X.shape[1]

    net = net.copy()
    params = net.weights + net.biases
    m = [np.zeros_like(p) for p in params]
    v = [np.zeros_like(p) for p in params]

    rng = make_rng(cfg.seed)
    full = cfg.batch == "full" or cfg.batch >= N

    best_loss = np.inf
    best = None
    history = []

    for it in range(cfg.iterations):

        if full:
            loss, gW, gb = loss_and_gradients(net, X, T)
            full_loss = loss
        else:
            idx = rng.choice(N, size = cfg.batch, replace = False)
            loss, gW, gb = loss_and_gradients(net, X[:, idx], T[:, idx])
            full_loss = mse(net, X, T) if it % cfg.loss_log_stride == 0 else None

        if not np.isfinite(loss):
            raise TrainingDivergedError(f'non-finite loss at iteration {it}', it)

        if full_loss is not None and full_loss < best_loss:
            best_loss = full_loss
            best = [p.copy() for p in params]

        if it % cfg.loss_log_stride == 0:
            history.append(float(loss))
            logger.debug("iteration %d: loss %.6e", it, loss)

        # adam update (in place so that net sees the new values)
        grads = gW + gb
        t = it + 1
        lr = cfg.learning_rate * cfg.lr_decay ** (it / cfg.iterations)
        for p, g, mp, vp in zip(params, grads, m, v):
            mp *= cfg.beta1
            mp += (1 - cfg.beta1) * g
            vp *= cfg.beta2
            vp += (1 - cfg.beta2) * g**2
            m_hat = mp / (1 - cfg.beta1**t)
            v_hat = vp / (1 - cfg.beta2**t)
            p -= lr * m_hat / (np.sqrt(v_hat) + cfg.eps)

    final_loss = mse(net, X, T)
    if not np.isfinite(final_loss):
        raise TrainingDivergedError(f'non-finite loss at iteration {cfg.iterations}', cfg.iterations)

    if final_loss < best_loss:
        best_loss = final_loss
    else:
        L = net.depth
        net.weights = best[:L]
        net.biases = best[L:]

    logger.info("Training finished: %d iterations, best loss %.4e", cfg.iterations, best_loss)

    return net, history
