"""
Geometric proxies for comparing reconstructed attractors
"""
import numpy as np
from scipy.spatial import ConvexHull, QhullError, procrustes
from scipy.spatial.distance import pdist


def curve_diameter(coords):
    """
    Largest distance between two points of a k x M point set
    """
    P = np.asarray(coords, dtype = float).T
    if P.shape[1] == 1:
        return float(P.max() - P.min())
    try:
        P = P[ConvexHull(P).vertices]
    except QhullError:
        # degenerate (e.g. collinear) sets have no hull
        pass
    return float(pdist(P).max()) if P.shape[0] > 1 else 0.0


def closed_curve_gap(coords):
    """
    Largest gap between consecutive points divided by the diameter of
    the point set.  Small values mean the points trace a connected
    curve.
    """
    X = np.asarray(coords, dtype = float)
    if X.shape[1] < 2:
        raise ValueError('a curve needs at least two points')
    diameter = curve_diameter(X)
    if diameter == 0:
        return 0.0
    gaps = np.linalg.norm(np.diff(X, axis = 1), axis = 0)
    return float(gaps.max() / diameter)


def procrustes_correlation(a, b, standardize = False):
    """
    Correlation between two k x M embeddings after optimal translation,
    rotation (or reflection) and scaling, sqrt(1 - disparity).

    With standardize, every coordinate of both embeddings is first
    scaled to unit variance, so a weak delay mode weighs as much as
    the leading one.
    """
    A = np.asarray(a, dtype = float).T
    B = np.asarray(b, dtype = float).T
    if A.shape != B.shape:
        raise ValueError(f'embeddings have shapes {A.shape[::-1]} and {B.shape[::-1]}')
    if standardize:
        A = A / _nonzero(A.std(axis = 0))
        B = B / _nonzero(B.std(axis = 0))
    _, _, disparity = procrustes(A, B)
    return float(np.sqrt(max(0.0, 1 - disparity)))


def _nonzero(std):
    return np.where(std > 0, std, 1.0)


def conic_residual(coords):
    """
    Largest algebraic residual of the best-fit conic
    a x^2 + b xy + c y^2 + d x + e y + f = 0 (unit coefficient vector)
    through a 2 x M point set, after centring and scaling the points
    to unit RMS radius
    """
    X = np.asarray(coords, dtype = float)
    if X.shape[0] != 2:
        raise ValueError('conic fits need two-dimensional coordinates')
    X = X - X.mean(axis = 1, keepdims = True)
    X = X / np.sqrt(np.mean(np.sum(X**2, axis = 0)))
    x, y = X
    D = np.column_stack([x**2, x * y, y**2, x, y, np.ones_like(x)])
    _, _, Vt = np.linalg.svd(D, full_matrices = False)
    return float(np.max(np.abs(D @ Vt[-1])))
