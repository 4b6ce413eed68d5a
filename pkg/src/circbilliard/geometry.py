"""Billiard footprints and their area/perimeter ledger."""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import GeometryError


class Kind(str, Enum):
    FULL_CIRCLE = "circle"
    HALF_CIRCLE = "half"
    CIRCLE_WITH_BAFFLE = "baffle"
    WEDGE = "wedge"
    ANNULUS = "annulus"
    ANNULUS_WITH_BAFFLE = "annulus-baffle"


_NEEDS_F = {Kind.WEDGE, Kind.ANNULUS, Kind.ANNULUS_WITH_BAFFLE}


@dataclass(frozen=True)
class Geometry:
    """A circular billiard variant of outer radius ``R``.

    ``f`` is the wedge opening parameter (sector angle ``(1 + f) pi``, with
    ``-1 < f <= 1``) or the annulus inner-radius fraction (``0 < f < 1``).
    """

    kind: Kind
    R: float = 1.0
    f: float | None = None

    def __post_init__(self):
        try:
            kind = Kind(self.kind)
        except ValueError:
            raise GeometryError("kind", f"unknown geometry {self.kind!r}") from None
        object.__setattr__(self, "kind", kind)
        if not (isinstance(self.R, (int, float)) and math.isfinite(self.R) and self.R > 0):
            raise GeometryError("R", f"radius must be a positive real, got {self.R!r}")
        object.__setattr__(self, "R", float(self.R))
        if kind in _NEEDS_F:
            if self.f is None:
                raise GeometryError("f", f"{kind.value} geometry requires f")
            f = float(self.f)
            if kind is Kind.WEDGE and not -1.0 < f <= 1.0:
                raise GeometryError("f", f"wedge requires -1 < f <= 1, got {f!r}")
            if kind is not Kind.WEDGE and not 0.0 < f < 1.0:
                raise GeometryError("f", f"annulus requires 0 < f < 1, got {f!r}")
            object.__setattr__(self, "f", f)
        elif self.f is not None:
            raise GeometryError("f", f"{kind.value} geometry takes no f parameter")

    @classmethod
    def full_circle(cls, R=1.0):
        return cls(Kind.FULL_CIRCLE, R)

    @classmethod
    def half_circle(cls, R=1.0):
        return cls(Kind.HALF_CIRCLE, R)

    @classmethod
    def baffle(cls, R=1.0):
        return cls(Kind.CIRCLE_WITH_BAFFLE, R)

    @classmethod
    def wedge(cls, f, R=1.0):
        return cls(Kind.WEDGE, R, f)

    @classmethod
    def annulus(cls, f, R=1.0, baffle=False):
        return cls(Kind.ANNULUS_WITH_BAFFLE if baffle else Kind.ANNULUS, R, f)

    @property
    def inner_radius(self):
        """Inner wall radius (0 unless annular)."""
        if self.kind in (Kind.ANNULUS, Kind.ANNULUS_WITH_BAFFLE):
            return self.f * self.R
        return 0.0

    @property
    def angular_domain(self):
        """Angular interval ``(lo, hi)`` covered by the footprint."""
        if self.kind is Kind.HALF_CIRCLE:
            return (0.0, math.pi)
        if self.kind is Kind.WEDGE:
            return (0.0, (1.0 + self.f) * math.pi)
        return (-math.pi, math.pi)

    def area(self):
        return ledger(self).area

    def perimeter(self):
        return ledger(self).perimeter

    def describe(self):
        if self.f is None:
            return f"{self.kind.value}(R={self.R!r})"
        return f"{self.kind.value}(R={self.R!r}, f={self.f!r})"


@dataclass(frozen=True)
class GeometryLedger:
    area: float
    perimeter: float


def ledger(geometry):
    """Area and perimeter entering the smooth Weyl counting law.

    A baffle counts twice toward the perimeter, once per face.
    """
    R, f = geometry.R, geometry.f
    kind = geometry.kind
    if kind is Kind.FULL_CIRCLE:
        return GeometryLedger(math.pi * R**2, 2 * math.pi * R)
    if kind is Kind.HALF_CIRCLE:
        return GeometryLedger(math.pi * R**2 / 2, (2 + math.pi) * R)
    if kind is Kind.CIRCLE_WITH_BAFFLE:
        return GeometryLedger(math.pi * R**2, (2 * math.pi + 2) * R)
    if kind is Kind.WEDGE:
        return GeometryLedger((1 + f) * math.pi * R**2 / 2, (2 + (1 + f) * math.pi) * R)
    area = math.pi * R**2 * (1 - f * f)
    perimeter = 2 * math.pi * R * (1 + f)
    if kind is Kind.ANNULUS_WITH_BAFFLE:
        perimeter += 2 * R * (1 - f)
    return GeometryLedger(area, perimeter)
