import logging
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import svd

logger = logging.getLogger(__name__)


@dataclass(frozen = True, eq = False)
class DmdModel():
    """
    Linear one-step model x_{k+1} = A x_k

    a_matrix:   D x D operator
    rank_used:  SVD truncation rank
    dt:         time step of the pairs it was fitted on
    """
    a_matrix: np.ndarray
    rank_used: int
    dt: float = 1.0

    def forward(self, X):
        return self.a_matrix @ np.asarray(X, dtype = float)

    def eigenvalues(self):
        return np.linalg.eigvals(self.a_matrix)


def fit_dmd(pairs, rank = None):
    """
    Exact DMD: with the truncated SVD X1 = U S V^T,
    A = X2 V S^{-1} U^T.  If X1 has lower numerical rank than
    requested the truncation is reduced with a warning.
    """
    X1, X2 = pairs.x1, pairs.x2
    D, M = X1.shape
    if rank is None:
        rank = D
    if not 1 <= rank <= D:
        raise ValueError(f'rank must lie in [1, {D}]')
    if M < D:
        raise ValueError(f'{M} pairs are too few to fit a {D} x {D} operator')

    U, s, Vt = svd(X1, full_matrices = False)
    numerical = int(np.sum(s > s[0] * max(D, M) * np.finfo(float).eps)) if s[0] > 0 else 0
    if numerical == 0:
        raise ValueError("cannot fit DMD to all-zero snapshots")
    if numerical < rank:
        message = f'X1 has numerical rank {numerical}, truncating DMD from rank {rank}'
        logger.warning(message)
        warnings.warn(message, RuntimeWarning)
        rank = numerical

    Ur, sr, Vr = U[:, :rank], s[:rank], Vt[:rank].T
    A = X2 @ Vr @ np.diag(1 / sr) @ Ur.T

    return DmdModel(A, rank, pairs.dt)
