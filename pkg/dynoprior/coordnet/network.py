"""
The coordinate network

    F_0 = normalize(x)
    F_l = phi(W_l F_{l-1} + b_l),   l = 1, ..., L-1
    F_L = W_L F_{L-1} + b_L

where normalize applies a per-input-dimension affine map
u = (x - shift) / scale before the first layer.
"""
import numpy as np

from .activations import make_activation
from ..rng import make_rng


class Network():
    """
    Class for storing the weights, biases, activation and input
    normalisation of a coordinate network.

    Inputs are either a single point of shape (n0,) or a batch of
    shape (n0, N); outputs follow the same convention.
    """

    def __init__(self, weights, biases, activation, shift = None, scale = None):

        self.weights = [np.array(W, dtype = float) for W in weights]
        self.biases = [np.array(b, dtype = float).reshape(-1) for b in biases]
        self.activation = make_activation(activation)

        if len(self.weights) == 0 or len(self.weights) != len(self.biases):
            raise ValueError('a network needs one bias vector per weight matrix')

        for l, (W, b) in enumerate(zip(self.weights, self.biases)):
            if W.ndim != 2 or W.shape[0] != b.shape[0]:
                raise ValueError(f'layer {l + 1}: weight shape {W.shape} and bias length {b.shape[0]} disagree')
            if l > 0 and W.shape[1] != self.weights[l - 1].shape[0]:
                raise ValueError(f'layer {l + 1}: expects {W.shape[1]} inputs, previous layer has {self.weights[l - 1].shape[0]} outputs')

        n0 = self.weights[0].shape[1]
        self.shift = np.zeros(n0) if shift is None else np.array(shift, dtype = float).reshape(-1)
        self.scale = np.ones(n0) if scale is None else np.array(scale, dtype = float).reshape(-1)
        if self.shift.shape != (n0,) or self.scale.shape != (n0,):
            raise ValueError(f'normalisation must have one (shift, scale) pair per input, n0 = {n0}')
        if np.any(self.scale == 0):
            raise ValueError('normalisation scale must be non-zero')

    @property
    def widths(self):
        return [self.weights[0].shape[1]] + [W.shape[0] for W in self.weights]

    @property
    def depth(self):
        return len(self.weights)

    def copy(self):
        return Network(self.weights, self.biases, self.activation, self.shift, self.scale)

    def normalize(self, X):
        return (X - self.shift[:, None]) / self.scale[:, None]

    def _as_batch(self, x):
        x = np.asarray(x, dtype = float)
        single = x.ndim == 1
        X = x[:, None] if single else x
        if X.shape[0] != self.widths[0]:
            raise ValueError(f'expected inputs of dimension {self.widths[0]}, got {X.shape[0]}')
        return X, single

    def layers(self, X, upto = None):
        """
        Forward pass on a normalised batch.  Returns the lists of
        pre-activations Z_l and layer outputs F_l (F_0 first).
        """
        L = self.depth if upto is None else upto
        Z, F = [], [X]
        for l in range(L):
            z = self.weights[l] @ F[-1] + self.biases[l][:, None]
            Z.append(z)
            F.append(z if l == self.depth - 1 else self.activation(z))
        return Z, F

    def forward(self, x, layer = None):
        """
        Evaluates the network (or its first layer_k layers)
        """
        X, single = self._as_batch(x)
        _, F = self.layers(self.normalize(X), upto = layer)
        return F[-1][:, 0] if single else F[-1]

    def input_jacobians(self, x, layer = None):
        """
        Forward-mode Jacobians of the layer output with respect to the
        raw input, returned as an n_k x n0 x N array.  This is the
        product D_k W_k ... D_1 W_1 diag(1 / scale) with D_l the
        diagonal matrix of activation derivatives.
        """
        X, _ = self._as_batch(x)
        L = self.depth if layer is None else layer
        n0, N = X.shape

        J = np.broadcast_to(np.diag(1 / self.scale)[:, :, None], (n0, n0, N))
        F = self.normalize(X)
        for l in range(L):
            Z = self.weights[l] @ F + self.biases[l][:, None]
            J = np.einsum('ij,jkn->ikn', self.weights[l], J)
            if l < self.depth - 1:
                J = J * self.activation.derivative(Z)[:, None, :]
                F = self.activation(Z)
            else:
                F = Z
        return J

    def jacobian(self, x, layer = None):
        """
        Returns the n_k x n0 Jacobian at a single input
        """
        x = np.asarray(x, dtype = float).reshape(-1)
        return self.input_jacobians(x[:, None], layer)[:, :, 0]

    def features(self, inputs):
        """
        Returns the N x n_{L-1} matrix of penultimate-layer outputs
        """
        X, _ = self._as_batch(inputs)
        _, F = self.layers(self.normalize(X), upto = self.depth - 1)
        return F[-1].T

    def trained_range(self):
        """
        The raw input box that the normalisation maps onto [-1, 1],
        as an n0 x 2 array of [low, high]
        """
        half = np.abs(self.scale)
        return np.column_stack([self.shift - half, self.shift + half])

    def __repr__(self):
        return f'Network(widths={self.widths}, activation={self.activation!r})'


def init(widths, activation, seed = 0, shift = None, scale = None):
    """
    Creates a network with weights drawn from U(-sqrt(6/n_in), sqrt(6/n_in))
    and zero biases
    """
    widths = [int(n) for n in widths]
    if len(widths) < 2 or min(widths) < 1:
        raise ValueError(f'widths must list at least two positive sizes, got {widths}')

    rng = make_rng(seed)
    weights, biases = [], []
    for n_in, n_out in zip(widths[:-1], widths[1:]):
        bound = np.sqrt(6 / n_in)
        weights.append(rng.uniform(-bound, bound, size = (n_out, n_in)))
        biases.append(np.zeros(n_out))

    return Network(weights, biases, activation, shift, scale)


def forward(net, x):
    return net.forward(x)


def jacobian_t(net, x):
    return net.jacobian(x)


def input_jacobians(net, inputs, layer = None):
    return net.input_jacobians(inputs, layer)


def penultimate_features(net, inputs):
    return net.features(inputs)


def trained_range(net):
    return net.trained_range()
