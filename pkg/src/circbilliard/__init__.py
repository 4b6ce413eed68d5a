"""Spectra, Weyl counting and eigenfunctions of circular billiards with baffles, wedges and annuli."""

__version__ = "0.1.0"

from .geometry import Geometry, GeometryLedger, Kind, ledger  # noqa: E402
from .spectra import (  # noqa: E402
    AngularChannel,
    EigenState,
    Staircase,
    Symmetry,
    Units,
    baffle_decomposition,
    channels,
    eigenstate,
    eigenstates,
    lowest_levels,
    spectrum,
)
from .weyl import WeylModel, fit_weyl, staircase_residual, weyl_eval, weyl_predict  # noqa: E402

__all__ = [
    "AngularChannel",
    "EigenState",
    "Geometry",
    "GeometryLedger",
    "Kind",
    "Staircase",
    "Symmetry",
    "Units",
    "WeylModel",
    "baffle_decomposition",
    "channels",
    "eigenstate",
    "eigenstates",
    "fit_weyl",
    "ledger",
    "lowest_levels",
    "spectrum",
    "staircase_residual",
    "weyl_eval",
    "weyl_predict",
]
