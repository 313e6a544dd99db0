import numpy as np

from ..tables import write_table


def format_equation(coefs, terms, lhs):
    """
    Formats one output as e.g. dx/dt = -10.02*x + 9.97*y
    """
    parts = []
    for c, t in zip(coefs, terms):
        if c == 0:
            continue
        value = f'{abs(c):.4g}'
        body = value if t == "1" else f'{value}*{t}'
        if not parts:
            parts.append(body if c > 0 else f'-{body}')
        else:
            parts.append(f'+ {body}' if c > 0 else f'- {body}')

    rhs = " ".join(parts) if parts else "0"
    return f'd{lhs}/dt = {rhs}'


def equations(model):
    """
    One formatted equation per output dimension
    """
    terms = model.library.term_names()
    return [
        format_equation(model.gamma[:, d], terms, name)
        for d, name in enumerate(model.library.names)
    ]


def write_report(path, model):
    with open(path, "w") as f:
        f.write("\n".join(equations(model)) + "\n")


def write_coefficients_csv(path, model):
    """
    CSV with columns term, coef_x0, coef_x1, ...
    """
    header = ["term"] + [f'coef_x{d}' for d in range(model.gamma.shape[1])]
    rows = [
        [term] + list(np.asarray(row)) for term, row in zip(model.library.term_names(), model.gamma)
    ]
    write_table(path, header, rows)
