"""One-dimensional golden-section search."""

from __future__ import annotations

import math

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQ = (3 - math.sqrt(5)) / 2


def golden_min(f, a: float, b: float, tol: float):
    """Minimize f on [a, b] assuming a single local minimum there.

    Returns (x, f(x), width) where width is the final bracket width.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = (a + b) / 2
        return x, f(x), h
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c = a + INV_PHI_SQ * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(n - 1):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= INV_PHI
            c = a + INV_PHI_SQ * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h *= INV_PHI
            d = a + INV_PHI * h
            yd = f(d)
    if yc < yd:
        return c, yc, d - a
    return d, yd, b - c


def golden_max(f, a: float, b: float, tol: float):
    """Maximize f on [a, b]; see golden_min."""
    x, y, w = golden_min(lambda t: -f(t), a, b, tol)
    return x, -y, w
