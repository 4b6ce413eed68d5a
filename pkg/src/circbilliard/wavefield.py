"""Normalized eigenfunctions, probability densities and position expectation values."""

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from . import quadrature, specfun
from .errors import ConvergenceError, DomainError
from .geometry import Kind
from .spectra import Symmetry

#: Agreement required between the quadrature and closed-form radial norms.
NORM_XCHECK = 1e-8
_ANGLE_SLACK = 1e-12


class AngularKind(str, Enum):
    CONSTANT = "constant"
    COSINE = "cosine"
    SINE = "sine"
    HALF_INTEGER_EVEN = "half-integer-even"


@dataclass(frozen=True)
class AngularFunction:
    """Real angular factor on the interval ``[lo, hi]``, unit-normalized there."""

    kind: AngularKind
    m: float
    lo: float = -math.pi
    hi: float = math.pi

    @property
    def norm(self):
        width = self.hi - self.lo
        return 1.0 / math.sqrt(width) if self.kind is AngularKind.CONSTANT else math.sqrt(2.0 / width)

    @property
    def cusp(self):
        """Interior angle where the function has a derivative jump, if any."""
        return 0.0 if self.kind is AngularKind.HALF_INTEGER_EVEN else None

    def __call__(self, theta):
        return angular_eval(self, theta)


def angular_eval(fn, theta):
    """Value of the normalized angular function at ``theta`` (vectorised)."""
    theta = np.asarray(theta, dtype=float)
    if np.any(theta < fn.lo - _ANGLE_SLACK) or np.any(theta > fn.hi + _ANGLE_SLACK):
        raise DomainError(f"theta outside angular domain [{fn.lo:.6g}, {fn.hi:.6g}]")
    if fn.kind is AngularKind.CONSTANT:
        out = np.full_like(theta, fn.norm)
    elif fn.kind is AngularKind.COSINE:
        out = fn.norm * np.cos(fn.m * theta)
    elif fn.kind is AngularKind.SINE:
        out = fn.norm * np.sin(fn.m * theta)
    else:
        out = fn.norm * np.sin(fn.m * np.abs(theta))
    return float(out) if out.ndim == 0 else out


def angular_function(geometry, channel, parity=None):
    """Angular factor for ``channel`` in ``geometry``.

    ``parity`` picks ``"sine"`` (default) or ``"cosine"`` for the doubly
    degenerate channels of the full circle and annulus.
    """
    lo, hi = geometry.angular_domain
    kind = geometry.kind
    if kind in (Kind.FULL_CIRCLE, Kind.ANNULUS):
        if channel.nu == 0:
            return AngularFunction(AngularKind.CONSTANT, 0.0, lo, hi)
        if parity in (None, "sine"):
            return AngularFunction(AngularKind.SINE, channel.nu, lo, hi)
        if parity == "cosine":
            return AngularFunction(AngularKind.COSINE, channel.nu, lo, hi)
        raise DomainError(f"parity must be 'sine' or 'cosine', got {parity!r}")
    if parity not in (None, "sine") and channel.symmetry is not Symmetry.HALF_INTEGER_EVEN:
        raise DomainError(f"{kind.value} geometry supports only sine states")
    if channel.symmetry is Symmetry.HALF_INTEGER_EVEN:
        return AngularFunction(AngularKind.HALF_INTEGER_EVEN, channel.nu, lo, hi)
    return AngularFunction(AngularKind.SINE, channel.nu, lo, hi)


@dataclass(frozen=True)
class RadialMode:
    """``norm * u(r)`` with ``u = J_nu(z r / R)`` (disk) or the annular cross product.

    ``closed_form`` holds ``sqrt(2) / (R |J_{nu+1}(z)|)`` for disk modes.
    """

    nu: float
    n_r: int
    z: float
    norm: float
    R: float = 1.0
    inner: float = 0.0
    closed_form: float | None = field(default=None, compare=False)

    def shape(self, r):
        x = self.z * np.asarray(r, dtype=float) / self.R
        if self.inner == 0.0:
            return specfun.bessel_j(self.nu, x)
        xi = self.z * self.inner / self.R
        return specfun.bessel_j(self.nu, x) * specfun.bessel_y(self.nu, xi) - specfun.bessel_j(
            self.nu, xi
        ) * specfun.bessel_y(self.nu, x)

    def __call__(self, r):
        return self.norm * self.shape(r)


def _radial_breakpoints(lo, hi):
    # grade toward the origin for disks; annuli have no singular endpoint
    return quadrature.graded_breakpoints(lo, hi) if lo == 0.0 else None


def _shape_integral(nu, z, R, inner):
    probe = RadialMode(nu, 1, z, 1.0, R, inner)
    return quadrature.integrate(
        lambda r: probe.shape(r) ** 2 * r,
        inner,
        R,
        rtol=1e-12,
        breakpoints=_radial_breakpoints(inner, R),
    )


def radial_normalize(nu, n_r, R=1.0, tol=None):
    """Normalized disk radial mode for the ``n_r``-th zero of ``J_nu``.

    The norm comes from quadrature of ``J_nu(z r / R)**2 r`` and is checked
    against the closed form; a disagreement beyond ``NORM_XCHECK`` raises
    :class:`ConvergenceError`.
    """
    z = specfun.bessel_j_zero(nu, n_r, tol).z
    norm = 1.0 / math.sqrt(_shape_integral(nu, z, R, 0.0))
    closed = math.sqrt(2.0) / (R * abs(specfun.bessel_j(nu + 1.0, z)))
    if abs(norm / closed - 1.0) > NORM_XCHECK:
        raise ConvergenceError(f"radial norm mismatch for nu={nu}, n_r={n_r}: {norm!r} vs {closed!r}")
    return RadialMode(float(nu), int(n_r), z, norm, float(R), 0.0, closed)


def annulus_radial_mode(nu, f, n_r, R=1.0, tol=None):
    """Normalized annular radial mode vanishing at ``r = fR`` and ``r = R``."""
    z = specfun.annulus_zero(nu, f, n_r, tol).z
    norm = 1.0 / math.sqrt(_shape_integral(nu, z, R, f * R))
    return RadialMode(float(nu), int(n_r), z, norm, float(R), f * R)


@lru_cache(maxsize=256)
def _radial_for(geometry, nu, n_r):
    if geometry.kind in (Kind.ANNULUS, Kind.ANNULUS_WITH_BAFFLE):
        return annulus_radial_mode(nu, geometry.f, n_r, geometry.R)
    return radial_normalize(nu, n_r, geometry.R)


def radial_mode(geometry, state):
    return _radial_for(geometry, state.nu, state.n_r)


def _check_point(geometry, radial, angular, r, theta):
    r = np.asarray(r, dtype=float)
    if np.any(r < radial.inner - 1e-12 * radial.R) or np.any(r > radial.R * (1 + 1e-12)):
        raise DomainError(f"r outside [{radial.inner:g}, {radial.R:g}] for {geometry.describe()}")
    angular(theta)  # raises on a bad angle


def psi(geometry, state, r, theta, parity=None):
    """Real eigenfunction ``psi(r, theta)``, broadcasting ``r`` against ``theta``."""
    radial = radial_mode(geometry, state)
    angular = angular_function(geometry, state.channel, parity)
    _check_point(geometry, radial, angular, r, theta)
    return radial(r) * angular(theta)


def psi_squared(geometry, state, r, theta, parity=None):
    """Probability density ``|psi(r, theta)|**2``."""
    return psi(geometry, state, r, theta, parity) ** 2


def radial_moment(mode, power=1):
    """``<r**power>`` over the radial probability ``(norm u)**2 r dr``."""
    return quadrature.integrate(
        lambda r: r**power * mode(r) ** 2 * r,
        mode.inner,
        mode.R,
        rtol=1e-12,
        breakpoints=_radial_breakpoints(mode.inner, mode.R),
    )


def angular_moment(fn, weight):
    """``integral weight(theta) Theta(theta)**2 dtheta`` over the domain of ``fn``.

    The interval is split at ``theta = 0`` whenever that point is interior, so
    every panel sees a smooth integrand even for cusped functions.
    """
    cuts = [fn.lo, fn.hi]
    if fn.lo < 0.0 < fn.hi:
        cuts.insert(1, 0.0)
    return quadrature.integrate(
        lambda t: weight(t) * angular_eval(fn, t) ** 2, fn.lo, fn.hi, rtol=1e-13, atol=1e-16, breakpoints=cuts
    )


def expectation_xy(geometry, state, parity=None):
    """Position expectation values ``(<x>, <y>)`` in the same length units as ``R``.

    The density separates, so each is a radial moment times an angular moment.
    """
    radial = radial_mode(geometry, state)
    angular = angular_function(geometry, state.channel, parity)
    r_mean = radial_moment(radial)
    return r_mean * angular_moment(angular, np.cos), r_mean * angular_moment(angular, np.sin)


def radial_node_count(mode, samples=2000):
    """Sign changes of the radial function strictly inside ``(inner, R)``."""
    r = np.linspace(mode.inner, mode.R, samples)[1:-1]
    s = np.sign(mode.shape(r))
    s = s[s != 0]
    return int(np.count_nonzero(s[:-1] != s[1:]))


@dataclass(frozen=True, eq=False)
class DensityGrid:
    """``values[i, j] = |psi(r[i], theta[j])|**2`` on a tensor grid (r-major)."""

    r: np.ndarray
    theta: np.ndarray
    values: np.ndarray
    meta: dict

    def integrate(self):
        """Trapezoid estimate of the total probability over the footprint."""
        inner = np.trapezoid(self.values, self.theta, axis=1)
        return float(np.trapezoid(inner * self.r, self.r))

    def rows(self):
        """``(r, theta, value)`` triples in r-major order."""
        for i, r in enumerate(self.r):
            for j, t in enumerate(self.theta):
                yield float(r), float(t), float(self.values[i, j])


def density_grid(geometry, state, n_r_samples=101, n_theta_samples=181, parity=None):
    """Probability density sampled on a uniform polar grid including boundaries."""
    if n_r_samples < 16 or n_theta_samples < 16:
        raise DomainError("density grids need at least 16 samples per axis")
    radial = radial_mode(geometry, state)
    angular = angular_function(geometry, state.channel, parity)
    r = np.linspace(radial.inner, radial.R, n_r_samples)
    theta = np.linspace(angular.lo, angular.hi, n_theta_samples)
    values = np.outer(radial(r) ** 2, angular(theta) ** 2)
    meta = {
        "geometry": geometry.kind.value,
        "R": geometry.R,
        "f": geometry.f,
        "m": state.nu,
        "n_r": state.n_r,
        "z": state.z,
        "norm": radial.norm,
        "angular": angular.kind.value,
    }
    return DensityGrid(r, theta, values, meta)
