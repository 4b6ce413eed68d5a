"""Angular channels, eigenvalue enumeration and counting staircases.

Energies are dimensionless throughout: ``E = z**2`` in units of
``hbar**2 / (2 mu R**2)``. :class:`Units` converts at the output boundary.
"""

import bisect
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import specfun
from .errors import DomainError, EnvelopeError
from .geometry import Geometry, Kind, ledger

#: Energies closer than this are merged into one staircase step.
TIE_TOL = 1e-9


class Symmetry(str, Enum):
    EXPONENTIAL = "exponential"
    SINE_ONLY = "sine"
    HALF_INTEGER_EVEN = "half-integer-even"


@dataclass(frozen=True)
class AngularChannel:
    nu: float
    degeneracy: int
    symmetry: Symmetry


@dataclass(frozen=True)
class EigenState:
    geometry: Geometry
    channel: AngularChannel
    n_r: int
    z: float
    energy: float
    multiplicity: int

    @property
    def nu(self):
        return self.channel.nu


@dataclass(frozen=True)
class Units:
    """Physical scale: outer radius and ``hbar**2 / (2 mu)``."""

    R: float = 1.0
    hbar2_over_2mu: float = 1.0

    def __post_init__(self):
        if not (self.R > 0 and self.hbar2_over_2mu > 0):
            raise DomainError("units must be positive")

    @property
    def energy_scale(self):
        return self.hbar2_over_2mu / self.R**2

    @property
    def is_natural(self):
        return self.R == 1.0 and self.hbar2_over_2mu == 1.0

    def energy(self, e):
        return e * self.energy_scale


@dataclass(frozen=True)
class Staircase:
    """Distinct ascending level energies with their multiplicities.

    ``count(E)`` is the counting function ``N(E)``: the number of states
    with energy ``<= E``.
    """

    energies: tuple
    multiplicities: tuple
    states: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.energies) != len(self.multiplicities):
            raise ValueError("energies and multiplicities differ in length")
        if any(b < a for a, b in zip(self.energies, self.energies[1:])):
            raise ValueError("staircase energies must be non-decreasing")
        if any(m < 1 for m in self.multiplicities):
            raise ValueError("multiplicities must be positive")

    @classmethod
    def from_states(cls, states, tie_tol=TIE_TOL):
        states = sorted(states, key=lambda s: (s.energy, s.nu, s.n_r))
        energies, mults = [], []
        for s in states:
            if energies and s.energy - energies[-1] <= tie_tol:
                mults[-1] += s.multiplicity
            else:
                energies.append(s.energy)
                mults.append(s.multiplicity)
        return cls(tuple(energies), tuple(mults), tuple(states))

    @classmethod
    def from_energies(cls, energies, tie_tol=TIE_TOL):
        """Build from a flat list of (possibly repeated) state energies."""
        out_e, out_m = [], []
        for e in sorted(float(x) for x in energies):
            if out_e and e - out_e[-1] <= tie_tol:
                out_m[-1] += 1
            else:
                out_e.append(e)
                out_m.append(1)
        return cls(tuple(out_e), tuple(out_m))

    def __len__(self):
        return len(self.energies)

    @property
    def cumulative(self):
        return np.cumsum(self.multiplicities, dtype=int)

    @property
    def levels(self):
        return list(zip(self.energies, self.cumulative.tolist()))

    @property
    def n_states(self):
        return int(sum(self.multiplicities))

    def count(self, E):
        """``N(E)``, vectorised over ``E``."""
        cum = np.concatenate([[0], self.cumulative])
        idx = np.searchsorted(np.asarray(self.energies), E, side="right")
        out = cum[idx]
        return int(out) if np.ndim(out) == 0 else out

    def truncate(self, n_levels):
        """The lowest ``n_levels`` distinct levels."""
        keep = self.energies[:n_levels]
        cutoff = keep[-1] if keep else -math.inf
        states = tuple(s for s in self.states if s.energy <= cutoff + TIE_TOL)
        return Staircase(keep, self.multiplicities[:n_levels], states)

    def below(self, E_max):
        n = bisect.bisect_right(self.energies, E_max)
        return self.truncate(n)


def channels(geometry, nu_max):
    """Angular channels with ``nu <= nu_max`` in increasing order."""
    if not nu_max > 0:
        raise DomainError(f"nu_max must be positive, got {nu_max!r}")
    limit = nu_max * (1 + 1e-12)
    kind = geometry.kind
    out = []
    if kind in (Kind.FULL_CIRCLE, Kind.ANNULUS):
        out.append(AngularChannel(0.0, 1, Symmetry.EXPONENTIAL))
        out += [AngularChannel(float(n), 2, Symmetry.EXPONENTIAL) for n in range(1, int(limit) + 1)]
    elif kind is Kind.HALF_CIRCLE:
        out += [AngularChannel(float(n), 1, Symmetry.SINE_ONLY) for n in range(1, int(limit) + 1)]
    elif kind in (Kind.CIRCLE_WITH_BAFFLE, Kind.ANNULUS_WITH_BAFFLE):
        for n in range(1, int(2 * limit) + 1):
            sym = Symmetry.SINE_ONLY if n % 2 == 0 else Symmetry.HALF_INTEGER_EVEN
            out.append(AngularChannel(n / 2, 1, sym))
    elif kind is Kind.WEDGE:
        n = 1
        while n / (1 + geometry.f) <= limit:
            out.append(AngularChannel(n / (1 + geometry.f), 1, Symmetry.SINE_ONLY))
            n += 1
    return out


def _check_envelope(z_max):
    # channels run up to nu ~ z_max, so both bounds bite at the same cutoff
    if z_max > min(specfun.Z_MAX, specfun.NU_MAX):
        raise EnvelopeError(
            f"E_max={z_max**2:g} needs Bessel orders up to {z_max:.1f}; "
            f"validated envelope is nu <= {specfun.NU_MAX:g}, z <= {specfun.Z_MAX:g}"
        )


def _channel_zeros(geometry, nu, z_max, tol):
    if geometry.kind in (Kind.ANNULUS, Kind.ANNULUS_WITH_BAFFLE):
        return specfun.annulus_zeros_below(nu, geometry.f, z_max, tol)
    return specfun.bessel_j_zeros_below(nu, z_max, tol)


def same_order(value, target):
    return abs(value - target) <= 1e-12 * max(1.0, abs(target))


def eigenstates(geometry, E_max, tol=None, nu=None):
    """Every eigenstate with ``E <= E_max``, sorted by energy.

    ``nu`` restricts the enumeration to a single channel. Channels are cut at
    ``nu > sqrt(E_max)``, which is complete because the first zero of ``J_nu``
    (and of the annulus determinant) exceeds ``nu``.
    """
    if not E_max > 0:
        raise DomainError(f"E_max must be positive, got {E_max!r}")
    z_max = math.sqrt(E_max)
    _check_envelope(z_max)
    states = []
    for ch in channels(geometry, z_max):
        if nu is not None and not same_order(ch.nu, nu):
            continue
        for i, z in enumerate(_channel_zeros(geometry, ch.nu, z_max, tol)):
            z = float(z)
            states.append(EigenState(geometry, ch, i + 1, z, z * z, ch.degeneracy))
    states.sort(key=lambda s: (s.energy, s.nu, s.n_r))
    return states


def spectrum(geometry, E_max, tol=None, nu=None):
    """Counting staircase of all levels with ``E <= E_max``."""
    return Staircase.from_states(eigenstates(geometry, E_max, tol, nu))


def lowest_levels(geometry, n_levels, tol=None):
    """Staircase holding the lowest ``n_levels`` distinct levels."""
    if n_levels < 1:
        raise DomainError("n_levels must be positive")
    book = ledger(geometry)
    a, b = book.area / (4 * math.pi * geometry.R**2), book.perimeter / (4 * math.pi * geometry.R)
    # invert the smooth count for a first window; every level may be doubly degenerate
    target = 2 * n_levels + 10
    k = (b + math.sqrt(b * b + 4 * a * target)) / (2 * a)
    E = k * k
    while True:
        stair = spectrum(geometry, E, tol)
        if len(stair) >= n_levels:
            return stair.truncate(n_levels)
        E *= 1.5


def eigenstate(geometry, nu, n_r, tol=None):
    """The single state in channel ``nu`` with radial index ``n_r``.

    Raises :class:`DomainError` when ``nu`` is not a channel of ``geometry``.
    """
    match = [ch for ch in channels(geometry, max(nu, 0.5) + 1.0) if same_order(ch.nu, nu)]
    if not match:
        raise DomainError(f"m={nu!r} is not an angular channel of {geometry.describe()}")
    ch = match[0]
    if geometry.kind in (Kind.ANNULUS, Kind.ANNULUS_WITH_BAFFLE):
        z = specfun.annulus_zero(ch.nu, geometry.f, n_r, tol).z
    else:
        z = specfun.bessel_j_zero(ch.nu, n_r, tol).z
    return EigenState(geometry, ch, int(n_r), z, z * z, ch.degeneracy)


def baffle_decomposition(E_max, tol=None, R=1.0):
    """Split the circle-plus-baffle spectrum into integer and half-integer channels."""
    states = eigenstates(Geometry.baffle(R), E_max, tol)
    integer = [s for s in states if s.channel.symmetry is Symmetry.SINE_ONLY]
    half = [s for s in states if s.channel.symmetry is Symmetry.HALF_INTEGER_EVEN]
    return Staircase.from_states(integer), Staircase.from_states(half)
