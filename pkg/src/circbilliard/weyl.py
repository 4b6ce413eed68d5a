"""Smooth area/perimeter counting law and least-squares fits to staircases."""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError
from .geometry import GeometryLedger, ledger

__all__ = [
    "GeometryLedger",
    "MIN_FIT_LEVELS",
    "Source",
    "WeylModel",
    "fit_weyl",
    "ledger",
    "staircase_residual",
    "weyl_eval",
    "weyl_predict",
    "weyl_rows",
]

MIN_FIT_LEVELS = 50


class Source(str, Enum):
    PREDICTED = "predicted"
    FITTED = "fitted"


@dataclass(frozen=True)
class WeylModel:
    """``N(E) ~ a E + b sqrt(E)``; ``rms`` is set for fitted models."""

    a: float
    b: float
    source: Source
    rms: float | None = None

    def rescaled(self, units):
        """The same curve with energies expressed in ``units``."""
        scale = units.energy_scale
        return WeylModel(self.a / scale, self.b / math.sqrt(scale), self.source, self.rms)


def weyl_predict(geometry, units=None):
    """Weyl coefficients ``a = A / 4 pi``, ``b = -P / 4 pi`` for ``geometry``.

    Energies are taken in units of ``hbar**2 / (2 mu R**2)`` unless a
    :class:`~circbilliard.spectra.Units` record rescales them.
    """
    book = ledger(geometry)
    R = geometry.R
    model = WeylModel(book.area / (4 * math.pi * R * R), -book.perimeter / (4 * math.pi * R), Source.PREDICTED)
    return model if units is None else model.rescaled(units)


def weyl_eval(model, E):
    """Evaluate ``a E + b sqrt(E)``; vectorised over ``E >= 0``."""
    E = np.asarray(E, dtype=float)
    if np.any(E < 0):
        raise DomainError("weyl_eval requires E >= 0")
    out = model.a * E + model.b * np.sqrt(E)
    return float(out) if out.ndim == 0 else out


def _sample(staircase, side):
    E = np.asarray(staircase.energies, dtype=float)
    mult = np.asarray(staircase.multiplicities, dtype=float)
    N = staircase.cumulative.astype(float)
    if side == "mid":
        N = N - mult / 2
    elif side == "left":
        N = N - mult
    elif side != "right":
        raise ValueError(f"side must be 'mid', 'left' or 'right', got {side!r}")
    return E, N


def fit_weyl(staircase):
    """Least-squares fit of ``a E + b sqrt(E)`` to the staircase.

    The step function is sampled once per distinct level at the midpoint of
    its jump, ``N(E_i) - m_i / 2``. Solved through the 2x2 normal equations
    after scaling both columns to unit norm.
    """
    if len(staircase) < MIN_FIT_LEVELS:
        raise DomainError(f"fit needs at least {MIN_FIT_LEVELS} levels, got {len(staircase)}")
    E, N = _sample(staircase, "mid")
    X = np.column_stack([E, np.sqrt(E)])
    scale = np.linalg.norm(X, axis=0)
    Xs = X / scale
    coef = np.linalg.solve(Xs.T @ Xs, Xs.T @ N) / scale
    rms = float(np.sqrt(np.mean((X @ coef - N) ** 2)))
    return WeylModel(float(coef[0]), float(coef[1]), Source.FITTED, rms)


def staircase_residual(staircase, model, side="mid"):
    """``(E_i, N_data(E_i) - N_model(E_i))`` at every level.

    ``side`` picks the staircase value at the jump: ``"mid"`` (default, the
    fit's sampling), ``"right"`` (count including the level) or ``"left"``.
    """
    E, N = _sample(staircase, side)
    return E, N - weyl_eval(model, E)


def weyl_rows(staircase, predicted, fitted, units=None):
    """Rows ``(E, N_data, N_weyl_predicted, N_weyl_fitted, residual)`` per level.

    ``N_data`` counts states up to and including the level and
    ``residual = N_data - N_weyl_fitted``. With ``units`` the energy column is
    rescaled; the models must then already be in the same units.
    """
    E, N = _sample(staircase, "right")
    out_E = E if units is None else units.energy(E)
    pred = weyl_eval(predicted, out_E)
    fit = weyl_eval(fitted, out_E)
    return [
        (float(e), int(n), float(p), float(q), float(n - q))
        for e, n, p, q in zip(out_E, N, pred, fit)
    ]
