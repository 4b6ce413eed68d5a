"""Command-line interface: ``circbilliard {spectrum,weyl,density,delta}``.

Settings come from built-in defaults, then an optional ``--config`` file of
``key = value`` lines, then command-line flags (highest precedence). Output
is deterministic: no timestamps, sorted rows, floats at 17 significant
digits. Energies are in units of ``hbar**2 / (2 mu R**2)`` unless
``--radius`` or ``--hbar2-2mu`` is set, in which case they are physical and
``--emax`` is read in the same units.
"""

import argparse
import configparser
import sys
from dataclasses import dataclass

from . import __version__, deltamodel, export, spectra, wavefield, weyl
from .errors import BilliardError, GeometryError
from .geometry import Geometry, Kind

GEOMETRIES = [k.value for k in Kind]

_FLAG_FOR_FIELD = {"kind": "--geometry", "R": "--radius", "f": "--f"}

_DEFAULTS = {
    "geometry": "circle",
    "f": None,
    "radius": 1.0,
    "hbar2_2mu": 1.0,
    "emax": None,
    "levels": None,
    "format": "csv",
    "out": None,
    "tol": None,
}

_CASTS = {"f": float, "radius": float, "hbar2_2mu": float, "emax": float, "levels": int, "tol": float}


class ConfigError(BilliardError, ValueError):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


@dataclass(frozen=True)
class RunConfig:
    geometry: Geometry
    units: spectra.Units
    emax: float | None
    levels: int | None
    format: str
    out: str | None
    tol: float | None

    def natural_emax(self):
        return None if self.emax is None else self.emax / self.units.energy_scale

    def require_cutoff(self):
        if (self.emax is None) == (self.levels is None):
            raise ConfigError("--emax", "exactly one of --emax / --levels must be given")


def read_config_file(path):
    """Parse a ``key = value`` file (``#`` comments) into a dict of typed values."""
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#", ";"))
    with open(path, encoding="utf-8") as fh:
        parser.read_string("[run]\n" + fh.read(), source=str(path))
    out = {}
    for key, raw in parser["run"].items():
        key = key.replace("-", "_")
        if key not in _DEFAULTS:
            raise ConfigError(key, f"unknown configuration key in {path}")
        out[key] = _cast(key, raw)
    return out


def _cast(key, raw):
    cast = _CASTS.get(key)
    if cast is None or raw is None:
        return raw
    try:
        return cast(raw)
    except ValueError:
        raise ConfigError(f"--{key.replace('_', '-')}", f"cannot parse {raw!r}") from None


def resolve_config(args):
    """Merge defaults, the config file and flags into a validated :class:`RunConfig`."""
    merged = dict(_DEFAULTS)
    if args.config:
        merged.update(read_config_file(args.config))
    for key in _DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    if merged["format"] not in ("csv", "json"):
        raise ConfigError("--format", f"must be csv or json, got {merged['format']!r}")
    if merged["tol"] is not None and not merged["tol"] > 0:
        raise ConfigError("--tol", "tolerance must be positive")
    if merged["levels"] is not None and merged["levels"] < 1:
        raise ConfigError("--levels", "level count must be positive")
    if merged["emax"] is not None and not merged["emax"] > 0:
        raise ConfigError("--emax", "E_max must be positive")
    if not merged["hbar2_2mu"] > 0:
        raise ConfigError("--hbar2-2mu", "must be positive")
    try:
        geometry = Geometry(merged["geometry"], merged["radius"], merged["f"])
    except GeometryError as exc:
        raise ConfigError(_FLAG_FOR_FIELD.get(exc.field, exc.field), str(exc).split(": ", 1)[1]) from None
    return RunConfig(
        geometry=geometry,
        units=spectra.Units(geometry.R, merged["hbar2_2mu"]),
        emax=merged["emax"],
        levels=merged["levels"],
        format=merged["format"],
        out=merged["out"],
        tol=merged["tol"],
    )


def _metadata(config, **extra):
    g = config.geometry
    return {
        "geometry": g.kind.value,
        "R": g.R,
        "f": g.f,
        "units": {"R": config.units.R, "hbar2_over_2mu": config.units.hbar2_over_2mu},
        "energy_unit": "hbar^2/(2 mu R^2)" if config.units.is_natural else "physical",
        **extra,
    }


def _staircase(config):
    config.require_cutoff()
    if config.levels is not None:
        return spectra.lowest_levels(config.geometry, config.levels, config.tol)
    return spectra.spectrum(config.geometry, config.natural_emax(), config.tol)


def cmd_spectrum(config, m=None):
    """Table of ``(m, n_r, z, E, multiplicity)`` sorted by energy."""
    config.require_cutoff()
    if config.levels is not None:
        states = spectra.lowest_levels(config.geometry, config.levels, config.tol).states
        if m is not None:
            states = [s for s in states if spectra.same_order(s.nu, m)]
    else:
        states = spectra.eigenstates(config.geometry, config.natural_emax(), config.tol, nu=m)
    rows = [(s.nu, s.n_r, s.z, float(config.units.energy(s.energy)), s.multiplicity) for s in states]
    return export.Table(["m", "n_r", "z", "E", "multiplicity"], rows, _metadata(config))


def cmd_weyl(config):
    """Staircase against the predicted and fitted smooth counts, with a summary block."""
    stair = _staircase(config)
    book = weyl.ledger(config.geometry)
    predicted = weyl.weyl_predict(config.geometry)
    fitted = weyl.fit_weyl(stair)
    units = None if config.units.is_natural else config.units
    if units is not None:
        predicted, fitted = predicted.rescaled(units), fitted.rescaled(units)
    rows = weyl.weyl_rows(stair, predicted, fitted, units)
    summary = {
        "geometry": config.geometry.describe(),
        "area": book.area,
        "perimeter": book.perimeter,
        "predicted_a": predicted.a,
        "predicted_b": predicted.b,
        "fitted_a": fitted.a,
        "fitted_b": fitted.b,
        "fit_rms": fitted.rms,
        "levels": len(stair),
        "states": stair.n_states,
    }
    columns = ["E", "N_data", "N_weyl_predicted", "N_weyl_fitted", "residual"]
    return export.Table(columns, rows, _metadata(config), summary)


def cmd_density(config, m, n_r, n_r_samples=101, n_theta_samples=181, parity=None):
    """Density grid for state ``(m, n_r)`` as ``(r, theta, value)`` triples."""
    state = spectra.eigenstate(config.geometry, m, n_r, config.tol)
    grid = wavefield.density_grid(config.geometry, state, n_r_samples, n_theta_samples, parity)
    summary = {k: v for k, v in grid.meta.items() if v is not None}
    summary["E"] = float(config.units.energy(state.energy))
    return export.Table(["r", "theta", "value"], list(grid.rows()), _metadata(config), summary)


def cmd_delta(config, model, couplings=None, branches=2, n_r=None):
    """Continuation table for the well (``Lambda, n, kL, residual``) or ring model."""
    if couplings is not None and any(not c >= 0 for c in couplings):
        raise ConfigError("--couplings", "couplings must be non-negative")
    if model == "well":
        grid = couplings if couplings is not None else list(deltamodel.default_g_grid())
        rows = [(b.coupling, b.n, b.kL, b.residual) for b in deltamodel.well_sweep(branches, grid)]
        return export.Table(["Lambda", "n", "kL", "residual"], rows, {"model": "well"})
    if model != "angular":
        raise ConfigError("--model", f"must be well or angular, got {model!r}")
    grid = None if couplings is None else sorted(set(couplings))
    sweep = deltamodel.continuation_sweep(branches, grid, n_r, config.tol)
    if n_r is None:
        rows = [(r.g, r.j, r.m, r.residual) for r in sweep]
        return export.Table(["g", "j", "m", "residual"], rows, {"model": "angular"})
    rows = [(r.g, r.j, r.m, r.residual, r.n_r, r.z, float(config.units.energy(r.E))) for r in sweep]
    return export.Table(["g", "j", "m", "residual", "n_r", "z", "E"], rows, {"model": "angular"})


def _couplings(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"couplings must be comma-separated reals, got {text!r}") from None


def _half_integer(text):
    try:
        if "/" in text:
            num, den = text.split("/")
            return float(num) / float(den)
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value configuration file (flags override it)")
    common.add_argument("--geometry", choices=GEOMETRIES)
    common.add_argument("--f", type=float, help="wedge opening or annulus inner fraction")
    common.add_argument("--radius", type=float, help="outer radius R")
    common.add_argument("--hbar2-2mu", dest="hbar2_2mu", type=float, help="hbar^2/2mu for physical energies")
    cut = common.add_mutually_exclusive_group()
    cut.add_argument("--emax", type=float, help="energy cutoff")
    cut.add_argument("--levels", type=int, help="number of lowest distinct levels")
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--tol", type=float, help="root tolerance in z")

    parser = argparse.ArgumentParser(prog="circbilliard", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalue table")
    p.add_argument("--m", type=_half_integer, help="restrict to one angular channel, e.g. 1/2")

    sub.add_parser("weyl", parents=[common], help="staircase vs. Weyl prediction and fit")

    p = sub.add_parser("density", parents=[common], help="probability density grid")
    p.add_argument("--m", type=_half_integer, required=True)
    p.add_argument("--nr", type=int, required=True, help="radial index n_r")
    p.add_argument("--r-samples", type=int, default=101)
    p.add_argument("--theta-samples", type=int, default=181)
    p.add_argument("--parity", choices=["sine", "cosine"])

    p = sub.add_parser("delta", parents=[common], help="delta-function continuation sweep")
    p.add_argument("--model", choices=["well", "angular"], required=True)
    p.add_argument("--couplings", type=_couplings, help="comma-separated couplings (default: log grid)")
    p.add_argument("--branches", type=int, default=2, help="largest branch index (j or n)")
    p.add_argument("--nr", type=int, help="compose each root with this radial zero (angular model)")
    return parser


def run(argv=None, stdout=None):
    stdout = sys.stdout if stdout is None else stdout
    args = build_parser().parse_args(argv)
    config = resolve_config(args)
    if args.command == "spectrum":
        table = cmd_spectrum(config, args.m)
    elif args.command == "weyl":
        table = cmd_weyl(config)
    elif args.command == "density":
        table = cmd_density(config, args.m, args.nr, args.r_samples, args.theta_samples, args.parity)
    else:
        if args.nr is not None and args.model == "well":
            raise ConfigError("--nr", "radial composition applies to the angular model only")
        table = cmd_delta(config, args.model, args.couplings, args.branches, args.nr)
    export.write(table, config.format, config.out, stdout)
    return 0


def main(argv=None):
    try:
        return run(argv)
    except ConfigError as exc:
        print(f"circbilliard: error: {exc}", file=sys.stderr)
        return 2
    except BilliardError as exc:
        print(f"circbilliard: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"circbilliard: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
