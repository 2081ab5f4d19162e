"""Golden-section refinement of scalar extrema on an interval."""

from __future__ import annotations

import math

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_min(fun, a: float, b: float, tol: float = 1e-12):
    """Minimize a unimodal fun on [a, b]; returns (x, fun(x)).

    The result is the best of the final bracket midpoint and the interior
    probes, so the returned value is always an actual evaluation at the
    returned point.
    """
    if not b > a:
        raise ValueError("golden_min needs b > a")
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = fun(c)
    fd = fun(d)
    while (b - a) > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = fun(d)
    m = 0.5 * (a + b)
    candidates = [(fun(m), m), (fc, c), (fd, d)]
    val, x = min(candidates)
    return x, val


def golden_max(fun, a: float, b: float, tol: float = 1e-12):
    """Maximize fun on [a, b] via golden_min of its negation."""
    x, val = golden_min(lambda t: -fun(t), a, b, tol)
    return x, -val
