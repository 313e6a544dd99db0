from itertools import combinations_with_replacement
from math import comb

import numpy as np
import sympy as sp


class CandidateLibrary():
    """
    Polynomial candidate functions theta_q(x) for sparse regression:
    every monomial in the D state variables of total degree at most
    d_max, ordered by degree with the constant term first.  There are
    comb(D + d_max, d_max) terms.

    Each term is stored as an exponent tuple (e_0, ..., e_{D-1}) and as
    a SymPy expression in the state symbols.
    """

    def __init__(self, dim, d_max = 2, names = None):

        if dim < 1:
            raise ValueError('a library needs at least one state variable')
        if d_max < 0:
            raise ValueError('d_max must be non-negative')

        self.dim = int(dim)
        self.d_max = int(d_max)

        if names is None:
            names = [f'x{i}' for i in range(self.dim)]
        if len(names) != self.dim:
            raise ValueError(f'{len(names)} names for {self.dim} state variables')
        self.names = [str(n) for n in names]
        self.symbols = [sp.Symbol(n) for n in self.names]

        self.exponents = []
        for degree in range(self.d_max + 1):
            for combo in combinations_with_replacement(range(self.dim), degree):
                e = [0] * self.dim
                for i in combo:
                    e[i] += 1
                self.exponents.append(tuple(e))

        self.terms = [
            sp.Mul(*[s**p for s, p in zip(self.symbols, e)]) for e in self.exponents
        ]

    @staticmethod
    def size(dim, d_max):
        return comb(dim + d_max, d_max)

    def __len__(self):
        return len(self.exponents)

    def term_names(self):
        return [str(t) for t in self.terms]

    def evaluate(self, X):
        """
        Returns Theta(X), the N x Q matrix of the terms evaluated at the
        columns of the D x N state matrix X.  A single state of shape
        (D,) gives a row of length Q.
        """
        X = np.asarray(X, dtype = float)
        single = X.ndim == 1
        if single:
            X = X[:, None]
        if X.shape[0] != self.dim:
            raise ValueError(f'expected {self.dim} state rows, got {X.shape[0]}')

        Theta = np.ones((X.shape[1], len(self)))
        for q, e in enumerate(self.exponents):
            for i, p in enumerate(e):
                if p:
                    Theta[:, q] *= X[i]**p

        return Theta[0] if single else Theta

    def __repr__(self):
        return f'CandidateLibrary(dim={self.dim}, d_max={self.d_max}, terms={len(self)})'
