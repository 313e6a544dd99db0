import numpy as np
import sympy as sp


def true_coefficients(spec, library):
    """
    Returns the Q x D matrix of the coefficients of the system's
    right-hand side over the monomials of a candidate library, so that
    library.evaluate(x) @ coefficients reproduces spec.rhs(x).

    Raises ValueError if the right-hand side is not a polynomial or
    uses monomials the library does not contain.
    """
    if library.dim != spec.dim:
        raise ValueError(f'library has {library.dim} variables, {spec.name} has {spec.dim}')

    Gamma = np.zeros((len(library), spec.dim))
    row = {e: q for q, e in enumerate(library.exponents)}

    for d, expr in enumerate(spec.exprs):
        try:
            poly = sp.Poly(sp.expand(expr), *spec.state)
        except sp.PolynomialError as err:
            raise ValueError(f'{spec.name}: component {d} is not polynomial') from err

        for monom, coef in poly.terms():
            if monom not in row:
                raise ValueError(
                    f'{spec.name}: term of degree {sum(monom)} is outside the library'
                )
            Gamma[row[monom], d] = float(coef)

    return Gamma
