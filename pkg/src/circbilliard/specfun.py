"""Real-order Bessel functions, spherical Bessel functions, and their zeros.

Evaluation is delegated to :mod:`scipy.special`; this module wraps it with the
domain checks, overflow guards and derivative recurrences the rest of the
package relies on, and implements the zero enumeration (cylindrical and
annular) with guaranteed sign-change brackets.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import BracketError, ConvergenceError, DomainError, EvaluationOverflowError
from .roots import safeguarded_newton

#: Global root tolerance in the dimensionless wavenumber z.
ROOT_TOL = 1e-12

#: Validated accuracy envelope of the kernel.
NU_MAX = 100.0
Z_MAX = 1000.0

# Zeros of J_nu are >= ~3.07 apart for every nu >= 0 (Sturm comparison on
# sqrt(z) J_nu), so a quarter-pi scan never puts two zeros in one cell.
_SCAN_STEP = math.pi / 4


@dataclass(frozen=True)
class BesselZero:
    """The ``n_r``-th positive zero ``z`` of ``J_nu``."""

    nu: float
    n_r: int
    z: float


@dataclass(frozen=True)
class AnnulusZero:
    """The ``n_r``-th root in kR of the annulus cross-product determinant."""

    nu: float
    f: float
    n_r: int
    z: float


def _check_order(nu):
    if not np.all(np.asarray(nu, dtype=float) >= 0):
        raise DomainError(f"order must be non-negative, got {nu!r}")


def _finite(value, what):
    if not np.all(np.isfinite(value)):
        raise EvaluationOverflowError(f"{what} produced a non-finite value")
    return value


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def bessel_j(nu, z):
    """Cylindrical Bessel function of the first kind, ``J_nu(z)`` for ``z >= 0``."""
    _check_order(nu)
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise DomainError("bessel_j requires z >= 0")
    return _scalar(_finite(special.jv(nu, z), f"J_{nu}"))


def bessel_y(nu, z):
    """Cylindrical Bessel function of the second kind, ``Y_nu(z)`` for ``z > 0``.

    Large negative values near the origin are returned as-is; an overflow to
    ``-inf`` raises :class:`EvaluationOverflowError`.
    """
    _check_order(nu)
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("bessel_y requires z > 0")
    return _scalar(_finite(special.yv(nu, z), f"Y_{nu}"))


def _j_prime_at_zero(nu):
    if nu == 0 or nu > 1:
        return 0.0
    if nu == 1:
        return 0.5
    return math.inf


def bessel_j_prime(nu, z):
    """Derivative ``J'_nu(z)`` from ``(J_{nu-1} - J_{nu+1}) / 2``."""
    _check_order(nu)
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise DomainError("bessel_j_prime requires z >= 0")
    if z.ndim == 0 and z == 0:
        return _j_prime_at_zero(float(nu))
    with np.errstate(invalid="ignore", divide="ignore"):
        out = 0.5 * (special.jv(nu - 1.0, z) - special.jv(nu + 1.0, z))
    # the derivative is genuinely +inf at z = 0 for 0 < nu < 1
    out = np.where(z == 0, _j_prime_at_zero(float(nu)), out)
    _finite(out[z > 0], f"J'_{nu}")
    return _scalar(out)


def bessel_y_prime(nu, z):
    """Derivative ``Y'_nu(z)`` from ``(Y_{nu-1} - Y_{nu+1}) / 2``."""
    _check_order(nu)
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("bessel_y_prime requires z > 0")
    out = 0.5 * (special.yv(nu - 1.0, z) - special.yv(nu + 1.0, z))
    return _scalar(_finite(out, f"Y'_{nu}"))


def spherical_j(n, z):
    """Spherical Bessel function ``j_n(z) = sqrt(pi / 2z) J_{n+1/2}(z)``."""
    if int(n) != n or n < 0:
        raise DomainError(f"spherical order must be a non-negative integer, got {n!r}")
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("spherical_j requires z > 0")
    return _scalar(np.sqrt(np.pi / (2.0 * z)) * special.jv(n + 0.5, z))


def mcmahon_guess(nu, n_r):
    """McMahon's large-zero estimate of the ``n_r``-th zero of ``J_nu``."""
    beta = (n_r + 0.5 * nu - 0.25) * math.pi
    return beta - (4.0 * nu * nu - 1.0) / (8.0 * beta)


def _with_slack(z_max):
    # a root refined from another bracket may land a few ulps away
    return z_max * (1.0 + 8.0 * np.finfo(float).eps)


def _sign_change_cells(grid, values):
    """Return ``(a, b)`` cells, in order, that contain exactly one zero.

    A grid point where the value is exactly zero is returned as a
    degenerate cell ``(x, x)``.
    """
    s = np.sign(values)
    exact = np.flatnonzero(s == 0)
    flips = np.flatnonzero(s[:-1] * s[1:] < 0)
    cells = [(grid[i], grid[i]) for i in exact] + [(grid[i], grid[i + 1]) for i in flips]
    cells.sort()
    return cells


def _refine_j(nu, cell, tol):
    a, b = cell
    if a == b:
        return float(a)
    return safeguarded_newton(
        lambda x: float(special.jv(nu, x)),
        lambda x: 0.5 * float(special.jv(nu - 1.0, x) - special.jv(nu + 1.0, x)),
        float(a),
        float(b),
        tol=0.1 * tol,
    )


def _check_j_zero(nu, z, tol):
    value = float(special.jv(nu, z))
    slope = 0.5 * float(special.jv(nu - 1.0, z) - special.jv(nu + 1.0, z))
    if abs(value) > tol * max(1.0, abs(slope) * z):
        raise ConvergenceError(f"zero of J_{nu} at {z!r} has residual {value!r}")


def _scan_start(nu):
    # J_nu > 0 on (0, nu]: the first zero exceeds nu.
    return float(nu) if nu > 0 else 0.0


def bessel_j_zero(nu, n_r, tol=None):
    """The ``n_r``-th positive zero of ``J_nu`` as a :class:`BesselZero`.

    The McMahon estimate only sizes the scan window; the zero index is fixed
    by counting sign changes on a grid starting below the first zero.
    """
    _check_order(nu)
    if int(n_r) != n_r or n_r < 1:
        raise DomainError(f"zero index must be a positive integer, got {n_r!r}")
    n_r = int(n_r)
    tol = ROOT_TOL if tol is None else tol
    nu = float(nu)
    start = _scan_start(nu)
    hi = max(mcmahon_guess(nu, n_r), start) + 2.0 * math.pi
    for _ in range(64):
        n_pts = int(math.ceil((hi - start) / _SCAN_STEP)) + 1
        grid = np.linspace(start, hi, n_pts)
        cells = _sign_change_cells(grid, special.jv(nu, grid))
        if len(cells) >= n_r:
            z = _refine_j(nu, cells[n_r - 1], tol)
            _check_j_zero(nu, z, tol)
            return BesselZero(nu, n_r, z)
        hi += math.pi * (n_r - len(cells) + 2)
    raise BracketError(f"could not isolate zero {n_r} of J_{nu}")


def bessel_j_zeros_below(nu, z_max, tol=None):
    """All positive zeros of ``J_nu`` that are ``<= z_max``, ascending."""
    _check_order(nu)
    tol = ROOT_TOL if tol is None else tol
    nu = float(nu)
    start = _scan_start(nu)
    if z_max <= start:
        return np.empty(0)
    # scan one step past the cutoff so a root sitting on it is still bracketed
    n_pts = int(math.ceil((z_max - start) / _SCAN_STEP)) + 2
    grid = start + _SCAN_STEP * np.arange(n_pts)
    zeros = []
    for cell in _sign_change_cells(grid, special.jv(nu, grid)):
        z = _refine_j(nu, cell, tol)
        if z > _with_slack(z_max):
            break
        _check_j_zero(nu, z, tol)
        zeros.append(z)
    return np.array(zeros)


def _check_annulus(nu, f):
    _check_order(nu)
    if not 0.0 < f < 1.0:
        raise DomainError(f"annulus inner-radius fraction must lie in (0, 1), got {f!r}")


def annulus_det(nu, f, kR):
    """Cross-product ``J_nu(kR) Y_nu(f kR) - J_nu(f kR) Y_nu(kR)``.

    Its roots in ``kR`` are the Dirichlet eigen-wavenumbers of the annulus
    ``fR < r < R`` in angular channel ``nu``.
    """
    _check_annulus(nu, f)
    kR = np.asarray(kR, dtype=float)
    if np.any(kR <= 0):
        raise DomainError("annulus_det requires kR > 0")
    inner = f * kR
    out = special.jv(nu, kR) * special.yv(nu, inner) - special.jv(nu, inner) * special.yv(nu, kR)
    return _scalar(_finite(out, "annulus determinant"))


def annulus_det_prime(nu, f, kR):
    """Derivative of :func:`annulus_det` with respect to ``kR``."""
    _check_annulus(nu, f)
    x = float(kR)
    fx = f * x
    jp = lambda t: 0.5 * (special.jv(nu - 1.0, t) - special.jv(nu + 1.0, t))  # noqa: E731
    yp = lambda t: 0.5 * (special.yv(nu - 1.0, t) - special.yv(nu + 1.0, t))  # noqa: E731
    out = (
        jp(x) * special.yv(nu, fx)
        + f * special.jv(nu, x) * yp(fx)
        - f * jp(fx) * special.yv(nu, x)
        - special.jv(nu, fx) * yp(x)
    )
    return float(_finite(out, "annulus determinant derivative"))


def _annulus_step(f):
    return min(math.pi / 2, math.pi * (1.0 - f) / 4)


def _annulus_start(nu):
    # Channel eigenvalues of the annulus dominate those of the disk, so every
    # root exceeds j_{nu,1} > nu; nothing is lost by starting there.
    return max(1e-3, float(nu))


def _refine_annulus(nu, f, cell, tol):
    a, b = cell
    if a == b:
        z = float(a)
    else:
        z = safeguarded_newton(
            lambda x: annulus_det(nu, f, x),
            lambda x: annulus_det_prime(nu, f, x),
            float(a),
            float(b),
            tol=0.1 * tol,
        )
    value = annulus_det(nu, f, z)
    slope = annulus_det_prime(nu, f, z)
    if abs(value) > 10.0 * tol * abs(slope) * max(1.0, z):
        raise ConvergenceError(f"annulus root at {z!r} has residual {value!r}")
    return z


def annulus_zeros_below(nu, f, kR_max, tol=None):
    """All annulus roots in ``kR`` that are ``<= kR_max``, ascending."""
    _check_annulus(nu, f)
    tol = ROOT_TOL if tol is None else tol
    start = _annulus_start(nu)
    if kR_max <= start:
        return np.empty(0)
    step = _annulus_step(f)
    n_pts = int(math.ceil((kR_max - start) / step)) + 2
    grid = start + step * np.arange(n_pts)
    zeros = [_refine_annulus(nu, f, c, tol) for c in _sign_change_cells(grid, annulus_det(nu, f, grid))]
    return np.array([z for z in zeros if z <= _with_slack(kR_max)])


def annulus_zero(nu, f, n_r, tol=None):
    """The ``n_r``-th annulus root in ``kR`` as an :class:`AnnulusZero`."""
    _check_annulus(nu, f)
    if int(n_r) != n_r or n_r < 1:
        raise DomainError(f"zero index must be a positive integer, got {n_r!r}")
    n_r = int(n_r)
    tol = ROOT_TOL if tol is None else tol
    start = _annulus_start(nu)
    step = _annulus_step(f)
    # roots are roughly pi / (1 - f) apart
    hi = start + (n_r + 1) * math.pi / (1.0 - f)
    for _ in range(64):
        n_pts = int(math.ceil((hi - start) / step)) + 1
        grid = np.linspace(start, hi, n_pts)
        cells = _sign_change_cells(grid, annulus_det(nu, f, grid))
        if len(cells) >= n_r:
            return AnnulusZero(float(nu), f, n_r, _refine_annulus(nu, f, cells[n_r - 1], tol))
        hi += (n_r - len(cells) + 2) * math.pi / (1.0 - f)
    raise BracketError(f"could not isolate annulus root {n_r} for nu={nu}, f={f}")
