"""Scalar root refinement on a sign-change bracket."""

import math

from .errors import BracketError, ConvergenceError

_EPS = 2.220446049250313e-16


def safeguarded_newton(f, fprime, a, b, tol=1e-13, maxiter=200, fa=None, fb=None):
    """Find a root of ``f`` in ``[a, b]`` with Newton steps kept inside a shrinking bracket.

    Any Newton step that leaves the bracket, or that fails to halve the bracket
    fast enough, is replaced by a bisection step. Iteration stops once the last
    step is below ``tol`` (or a few ulps of the root, whichever is larger).

    Raises
    ------
    BracketError
        If ``f(a)`` and ``f(b)`` have the same strict sign.
    ConvergenceError
        If ``maxiter`` iterations do not reach the tolerance.
    """
    fa = f(a) if fa is None else fa
    fb = f(b) if fb is None else fb
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise BracketError(f"no sign change on [{a!r}, {b!r}]: f(a)={fa!r}, f(b)={fb!r}")
    # orient so that f(lo) < 0 < f(hi)
    lo, hi = (a, b) if fa < 0 else (b, a)
    x = 0.5 * (a + b)
    dx_old = abs(b - a)
    dx = dx_old
    fx = f(x)
    for _ in range(maxiter):
        if fx == 0.0:
            return x
        if fx < 0:
            lo = x
        else:
            hi = x
        dfx = fprime(x)
        floor = max(tol, 4.0 * _EPS * abs(x))
        newton_ok = dfx != 0.0 and math.isfinite(dfx)
        if newton_ok:
            step = fx / dfx
            if abs(step) <= floor:
                # a step this small may round onto x itself, which sits on the bracket edge
                return x - step
            x_new = x - step
            inside = min(lo, hi) < x_new < max(lo, hi)
            newton_ok = inside and abs(2.0 * step) <= dx_old
        if newton_ok:
            dx_old, dx = dx, abs(step)
        else:
            dx_old = dx
            x_new = 0.5 * (lo + hi)
            dx = abs(x_new - x)
        x = x_new
        if dx <= floor or abs(hi - lo) <= floor:
            return x
        fx = f(x)
    raise ConvergenceError(f"no convergence in {maxiter} iterations on [{a!r}, {b!r}]")


def bisect(f, a, b, tol=1e-14, maxiter=400):
    """Plain bisection, for callers that have no derivative."""
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa < 0) == (fb < 0):
        raise BracketError(f"no sign change on [{a!r}, {b!r}]")
    for _ in range(maxiter):
        mid = 0.5 * (a + b)
        if abs(b - a) <= max(tol, 4.0 * _EPS * abs(mid)):
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b = mid
    raise ConvergenceError("bisection did not converge")
