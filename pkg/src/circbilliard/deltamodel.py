"""Repulsive delta-function continuation models.

Two eigenvalue problems are solved branch by branch:

* the 1D infinite well on ``(-L, L)`` with ``lambda * delta(x)`` at the
  centre, even states, condition ``Lambda sin(kL) + kL cos(kL) = 0``;
* the angular ring ``(-pi, pi)`` with ``g * delta(theta)``, even states,
  condition ``g cos(m pi) - 2 m sin(m pi) = 0``.

Both are solved in product form so that nothing diverges at the branch
edges, where roots pile up as the coupling grows.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError
from .roots import safeguarded_newton

_ROOT_TOL = 1e-15


@dataclass(frozen=True)
class WellDeltaBranch:
    """Even state ``n`` of the well: ``kL`` lies in ``[(2n-1) pi/2, n pi)``."""

    coupling: float
    n: int
    kL: float
    residual: float

    @property
    def energy(self):
        """Energy in units of ``hbar**2 / (2 mu L**2)``."""
        return self.kL**2


@dataclass(frozen=True)
class AngularDeltaBranch:
    """Even angular state on branch ``j``: ``m`` lies in ``[j, j + 1/2)``.

    ``phi`` is the phase of the eigenfunction, ``tan(phi) = g / 2m``.
    """

    g: float
    j: int
    m: float
    phi: float
    residual: float


def well_residual(coupling, kL):
    """Normalized residual ``(Lambda sin x + x cos x) / hypot(Lambda, x)``."""
    scale = math.hypot(coupling, kL)
    return 0.0 if scale == 0 else (coupling * math.sin(kL) + kL * math.cos(kL)) / scale


def angular_residual(g, m):
    """Normalized residual ``(g cos(m pi) - 2m sin(m pi)) / hypot(g, 2m)``."""
    scale = math.hypot(g, 2.0 * m)
    return 0.0 if scale == 0 else (g * math.cos(m * math.pi) - 2.0 * m * math.sin(m * math.pi)) / scale


def _check_index(value, lowest, name):
    if int(value) != value or value < lowest:
        raise DomainError(f"{name} must be an integer >= {lowest}, got {value!r}")
    return int(value)


def solve_well_delta(coupling, n):
    """Even-parity root ``kL`` on branch ``n`` for dimensionless coupling ``lambda mu L / hbar**2``.

    ``coupling=inf`` returns the limiting root ``n pi``.
    """
    if not coupling >= 0:
        raise DomainError(f"coupling must be non-negative, got {coupling!r}")
    n = _check_index(n, 1, "branch n")
    a, b = (2 * n - 1) * math.pi / 2, n * math.pi
    if coupling == 0:
        return WellDeltaBranch(0.0, n, a, well_residual(0.0, a))
    if math.isinf(coupling):
        return WellDeltaBranch(coupling, n, b, 0.0)
    # offset t = kL - a turns the condition into Lambda cos t - (a + t) sin t = 0
    # (up to a sign), which has G(0) = Lambda >= 0 exactly
    G = lambda t: coupling * math.cos(t) - (a + t) * math.sin(t)  # noqa: E731
    dG = lambda t: -(coupling + 1.0) * math.sin(t) - (a + t) * math.cos(t)  # noqa: E731
    x = a + safeguarded_newton(G, dG, 0.0, math.pi / 2, tol=_ROOT_TOL)
    # keep the open right edge of the branch even when it rounds onto n pi
    x = min(x, math.nextafter(b, a))
    return WellDeltaBranch(float(coupling), n, x, well_residual(coupling, x))


def solve_angular_delta(g, j):
    """Even-parity angular root ``m`` on branch ``j`` for coupling ``g``.

    ``g=0`` gives ``m = j`` (``j = 0`` is the constant mode); ``g=inf`` gives
    the half-integer limit ``m = j + 1/2``.
    """
    if not g >= 0:
        raise DomainError(f"coupling g must be non-negative, got {g!r}")
    j = _check_index(j, 0, "branch j")
    a, b = float(j), j + 0.5
    if math.isinf(g):
        # the impenetrable-baffle limit closes the branch interval
        return AngularDeltaBranch(g, j, b, math.pi / 2, 0.0)
    if g == 0:
        m = a
    else:
        # same offset trick: with m = j + s the condition is g cos(s pi) - 2m sin(s pi) = 0
        G = lambda s: g * math.cos(s * math.pi) - 2.0 * (j + s) * math.sin(s * math.pi)  # noqa: E731
        dG = lambda s: (  # noqa: E731
            -(g * math.pi + 2.0) * math.sin(s * math.pi) - 2.0 * (j + s) * math.pi * math.cos(s * math.pi)
        )
        m = a + safeguarded_newton(G, dG, 0.0, 0.5, tol=_ROOT_TOL)
        m = min(m, math.nextafter(b, a))
    phi = math.atan2(g, 2.0 * m)
    return AngularDeltaBranch(float(g), j, m, phi, angular_residual(g, m))


def even_norm_sq(m):
    """``integral_{-pi}^{pi} cos(m|theta| - phi)**2`` on an eigen-branch: ``pi (1 + sinc(2m))``.

    Uses ``phi = pi (m - j)``, which the eigenvalue condition enforces; the
    ``m -> 0`` limit is ``2 pi`` without any 0/0.
    """
    return math.pi * (1.0 + float(np.sinc(2.0 * m)))


def even_angular_fn(branch, theta):
    """Normalized even eigenfunction ``cos(m|theta| - phi) / sqrt(norm)`` on ``(-pi, pi)``."""
    theta = np.asarray(theta, dtype=float)
    if np.any(np.abs(theta) > math.pi):
        raise DomainError("theta must lie in (-pi, pi)")
    out = np.cos(branch.m * np.abs(theta) - branch.phi) / math.sqrt(even_norm_sq(branch.m))
    return float(out) if out.ndim == 0 else out


def odd_angular_fn(j, theta):
    """Odd eigenfunction ``sin(j theta) / sqrt(pi)``; the delta leaves it untouched."""
    j = _check_index(j, 1, "branch j")
    return np.sin(j * np.asarray(theta, dtype=float)) / math.sqrt(math.pi)


def default_g_grid():
    """``g = 0`` followed by 91 log-spaced couplings from 1e-3 to 1e6."""
    return np.concatenate([[0.0], np.logspace(-3, 6, 91)])


@dataclass(frozen=True)
class SweepRow:
    g: float
    j: int
    m: float
    residual: float
    n_r: int | None = None
    z: float | None = None
    E: float | None = None


def continuation_sweep(j_max, g_grid=None, n_r=None, tol=None):
    """Track ``m(g)`` on every branch ``j <= j_max`` across ``g_grid``.

    With ``n_r`` each root is composed with the ``n_r``-th zero of ``J_m``,
    tracing the disk energy ``z**2`` from the full circle (g = 0) toward the
    baffle (g -> inf). Rows are ordered by branch, then coupling.
    """
    j_max = _check_index(j_max, 0, "j_max")
    grid = default_g_grid() if g_grid is None else np.asarray(g_grid, dtype=float)
    if np.any(grid < 0):
        raise DomainError("couplings must be non-negative")
    if np.any(np.diff(grid) <= 0):
        raise DomainError("g_grid must be strictly increasing")
    rows = []
    for j in range(j_max + 1):
        for g in grid:
            br = solve_angular_delta(float(g), j)
            if n_r is None:
                rows.append(SweepRow(br.g, j, br.m, br.residual))
            else:
                z = specfun.bessel_j_zero(br.m, n_r, tol).z
                rows.append(SweepRow(br.g, j, br.m, br.residual, int(n_r), z, z * z))
    return rows


def well_sweep(n_max, couplings):
    """Even-state roots ``kL`` for every ``n <= n_max`` and coupling."""
    n_max = _check_index(n_max, 1, "n_max")
    couplings = np.asarray(couplings, dtype=float)
    if np.any(couplings < 0):
        raise DomainError("couplings must be non-negative")
    return [solve_well_delta(float(c), n) for n in range(1, n_max + 1) for c in couplings]
