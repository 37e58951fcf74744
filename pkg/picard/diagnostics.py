import numpy as np

from .grid import IDENTITY_TOLERANCE, GridFunction
from .iteration import picard_step

PAIR_TOLERANCE = 1e-9


def closed_form_f2(x):
    return np.expm1(x)


def closed_form_f3(x):
    return x + x ** 2 / 2


def closed_form_f4(x):
    root = np.sqrt(1 + 2 * np.asarray(x, dtype=float)) - 1
    return np.exp(root) * root


CLOSED_FORMS = {2: closed_form_f2, 3: closed_form_f3, 4: closed_form_f4}


def closed_form_errors(iterates):
    """Sup-node error of f_2, f_3, f_4 against their elementary closed forms."""
    errors = {}
    for n, form in CLOSED_FORMS.items():
        if n <= len(iterates):
            f = iterates[n - 1]
            errors[n] = float(np.max(np.abs(f.values - form(f.nodes))))
    return errors


def dominates_identity(f, tol=IDENTITY_TOLERANCE):
    return bool(np.all(f.values >= f.nodes - tol))


def expansion_ok(f, tol=PAIR_TOLERANCE):
    """|x - y| <= |f(x) - f(y)| + tol for every pair of nodes."""
    excess = f.values - f.nodes
    running_max = np.maximum.accumulate(excess)
    return bool(np.all(excess[1:] - running_max[:-1] >= -tol))


def convexity_ok(f, tol=PAIR_TOLERANCE):
    return bool(np.all(np.diff(f.values, 2) >= -tol))


def second_derivative_at_zero(f):
    v = f.values
    return float((v[2] - 2 * v[1] + v[0]) / f.h ** 2)


def iterate(n, xmax, m):
    f = GridFunction.identity(xmax, m)
    for _ in range(n - 1):
        f = picard_step(f)
    return f


def refinement_ratio(n, xmax, m, at=None):
    """Ratio of successive changes in f_n(at) as the grid doubles from m to 2m to 4m."""
    at = xmax if at is None else at
    values = [iterate(n, xmax, grid)(at) for grid in (m, 2 * m, 4 * m)]
    return abs(values[1] - values[0]) / abs(values[2] - values[1])
