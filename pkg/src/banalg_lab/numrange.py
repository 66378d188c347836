"""Numerical-range functionals of algebra elements.

The real-part supremum of the algebra numerical range of ``a`` equals
lim_{t -> 0+} (||e + t a|| - 1) / t; that difference quotient is nondecreasing
in t, which gives a built-in sanity check on every evaluation.
"""

from __future__ import annotations

import numpy as np

from .algebras import Element, norm

#: evaluation grid for the one-sided derivative, largest step first
T_GRID = (1e-2, 1e-3, 1e-4, 1e-5)
#: slack allowed when asserting monotonicity of the difference quotient
MONOTONE_SLACK = 1e-9


def mu_sup_re(a: Element) -> float:
    """sup of the real parts of the numerical range of ``a``.

    Evaluates (||e + t a|| - 1)/t on a small-t grid and Richardson-extrapolates
    the two finest values; expected absolute accuracy is about 1e-5.
    """
    e = a.algebra.unit
    vals = [(a.algebra.norm(e + t * a.matrix) - 1.0) / t for t in T_GRID]
    for coarse, fine in zip(vals, vals[1:]):
        if fine > coarse + MONOTONE_SLACK:
            raise AssertionError(
                "numerical-range difference quotient is not monotone in t"
            )
    # with steps t and t/10 the O(t) error cancels in (10*fine - coarse)/9
    return (10.0 * vals[-1] - vals[-2]) / 9.0


def numerical_radius(a: Element, tol: float = 1e-4, max_points: int = 1024) -> float:
    """sup |lambda| over the numerical range, via rotations of mu_sup_re.

    The angular grid is refined (doubled) until the value moves by less
    than ``tol``.
    """
    points = 64
    prev = None
    while True:
        thetas = 2 * np.pi * np.arange(points) / points
        w = max(mu_sup_re(np.exp(1j * th) * a) for th in thetas)
        if prev is not None and abs(w - prev) < tol:
            return max(w, prev)
        if points >= max_points:
            return w
        prev = w
        points *= 2


def in_omega(a: Element) -> bool:
    """Whether ||a - r e|| < r for some positive r (tested on a witness ladder).

    The construction that consumes this only ever needs elements of the form
    f + 2||f|| e, for which the witness r = 2||f|| works.
    """
    na = norm(a)
    if na == 0.0:
        return False
    e = a.algebra.unit
    for factor in (2.0, 1.0, 4.0, 8.0):
        r = factor * na
        if a.algebra.norm(a.matrix - r * e) < r:
            return True
    return False
