from .activations import Activation, Sinc, Gaussian, Sine, ReLU, make_activation, ACTIVATIONS
from .network import (
    Network, init, forward, jacobian_t, input_jacobians, penultimate_features, trained_range
)
from .training import TrainConfig, loss_and_gradients, train, mse
from .serialization import save, load, save_file, load_file
from .fitting import fit_signal, normalization_for, fold_output_scaling
