from .base_system import DynamicalSystem, sp


class Lorenz14(DynamicalSystem):
    """
    Fourteen-dimensional generalisation of the Lorenz system, a
    truncated Boussinesq convection model with stream-function modes
    psi_ij and temperature modes theta_ij.

    Parameters: a = 1/sqrt(2), r = 45.92, R = 6.75 r.  The Prandtl
    number sigma enters the psi equations but has no published value;
    it defaults to 10.  Overriding r without R rescales R.

    The advection terms of the temperature equations differ from the
    published listing in seven places (a term that cancelled itself
    in the theta02 equation, index typos psi33 -> psi31, psi31 theta22
    -> psi22 theta31 and psi24 theta24 -> psi24 theta22, one sign in
    the theta13 equation and the psi3x theta02 coefficients 4 -> 3).
    With these corrections the quadratic terms conserve
    sum(d_i psi_i**2) over the stream modes (d_i their damping
    coefficients) and sum(w_j theta_j**2) over the temperature modes
    (w = 2 for theta02 and theta04, 1 otherwise); as published they
    do not, and trajectories leave every bounded set.
    """

    # damping coefficients of the stream modes and weights of the
    # temperature modes in the conserved quadratic forms
    STREAM_WEIGHTS = tuple(sp.Rational(n, 2) for n in (3, 19, 12, 11, 27, 36))
    TEMPERATURE_WEIGHTS = (1, 1, 1, 1, 1, 1, 2, 2)

    name = "lorenz14"

    def __init__(self):
        super().__init__()

        names = ['psi11', 'psi13', 'psi22', 'psi31', 'psi33', 'psi24',
                 'theta11', 'theta13', 'theta22', 'theta31', 'theta33',
                 'theta24', 'theta02', 'theta04']
        self.state = list(sp.symbols(' '.join(names)))
        (p11, p13, p22, p31, p33, p24,
         t11, t13, t22, t31, t33, t24, t02, t04) = self.state

        a, R, sigma = sp.symbols('a R sigma')
        half = sp.Rational(1, 2)
        third = sp.Rational(1, 3)

        self.f = [
            # stream function modes
            -a * (sp.Rational(7, 3) * p13 * p22 + sp.Rational(17, 6) * p13 * p24
                  + third * p31 * p22 + sp.Rational(9, 2) * p33 * p24)
            - sigma * sp.Rational(3, 2) * p11 + sigma * a * sp.Rational(2, 3) * t11,

            a * (-sp.Rational(9, 19) * p11 * p22 + sp.Rational(33, 38) * p11 * p24
                 + sp.Rational(2, 19) * p31 * p22 - sp.Rational(125, 38) * p31 * p24)
            - sigma * sp.Rational(19, 2) * p13 + sigma * a * sp.Rational(2, 19) * t13,

            a * (sp.Rational(4, 3) * p11 * p13 - sp.Rational(2, 3) * p11 * p31
                 - sp.Rational(4, 3) * p13 * p31)
            - 6 * sigma * p22 + third * sigma * a * t22,

            a * (sp.Rational(9, 11) * p11 * p22 + sp.Rational(14, 11) * p13 * p22
                 + sp.Rational(85, 22) * p13 * p24)
            - sp.Rational(11, 2) * sigma * p31 + sp.Rational(6, 11) * sigma * a * t31,

            a * (sp.Rational(11, 6) * p11 * p24)
            - sp.Rational(27, 2) * sigma * p33 + sp.Rational(2, 9) * sigma * a * t33,

            a * (-sp.Rational(2, 9) * p11 * p13 - p11 * p33 + sp.Rational(5, 9) * p13 * p31)
            - 18 * sigma * p24 + sp.Rational(1, 9) * sigma * a * t24,

            # temperature modes
            a * (p11 * t02 + p13 * t22 - half * p13 * t24 - p13 * t02 + 2 * p13 * t04
                 + p22 * t13 + p22 * t31 + p31 * t22
                 + sp.Rational(3, 2) * p33 * t24 - half * p24 * t13 + sp.Rational(3, 2) * p24 * t33)
            + R * a * p11 - sp.Rational(3, 2) * t11,

            a * (-p11 * t22 - half * p11 * t24 - p11 * t02 + 2 * p11 * t04 - p22 * t11
                 - 2 * p22 * t31
                 + sp.Rational(5, 2) * p31 * t24 + half * p24 * t11 + sp.Rational(5, 2) * p24 * t31)
            + R * a * p13 - sp.Rational(19, 2) * t13,

            a * (p11 * t13 - p11 * t31 - p13 * t11 + 2 * p13 * t31 + 4 * p22 * t04
                 - p31 * t11 + 2 * p24 * t02)
            + 2 * R * a * p22 - 6 * t22,

            a * (p11 * t22 - 2 * p13 * t22 + sp.Rational(5, 2) * p13 * t24 - p22 * t11
                 + 2 * p22 * t13 + 3 * p31 * t02 - 3 * p33 * t02
                 + 8 * p33 * t04 - sp.Rational(5, 2) * p24 * t13)
            + 3 * R * a * p31 - sp.Rational(11, 2) * t31,

            a * (sp.Rational(3, 2) * p11 * t24 - 3 * p31 * t02 + 8 * p31 * t04
                 - sp.Rational(3, 2) * p24 * t11)
            + 3 * R * a * p33 - sp.Rational(27, 2) * t33,

            a * (half * p11 * t13 - sp.Rational(3, 2) * p11 * t33 + half * p13 * t11
                 - sp.Rational(5, 2) * p13 * t31 - 2 * p22 * t02
                 - sp.Rational(5, 2) * p31 * t13 - sp.Rational(3, 2) * p33 * t11)
            + 2 * R * a * p24 - 18 * t24,

            a * (-half * p11 * t11 + half * p11 * t13
                 + half * p13 * t11 + p22 * t24
                 - sp.Rational(3, 2) * p31 * t31 + sp.Rational(3, 2) * p31 * t33
                 + sp.Rational(3, 2) * p33 * t31 - p24 * t22)
            - 4 * t02,

            -a * (p11 * t13 + p13 * t11 + 2 * p22 * t22 + 4 * p31 * t33 + 4 * p33 * t31)
            - 16 * t04
        ]

        self.defaults = {
            "a": 2 ** -0.5,
            "r": 45.92,
            "R": 6.75 * 45.92,
            "sigma": 10.0
        }

    def build(self, params = None):
        params = dict(params or {})
        if "r" in params and "R" not in params:
            params["R"] = 6.75 * params["r"]
        return super().build(params)
