import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circbilliard import specfun
from circbilliard.errors import DomainError
from oracles import central_difference, j_series, sign_scan_bisect, y0_series

# Frozen from tests/oracles.py (power series + bisection in 40-digit arithmetic).
J0_Z1 = 2.404825557695772768621631879326429697362
J1_Z1 = 3.831705970207512315614435886308393672258
Y0_Z1 = 0.8935769662791675215848871020584712175583
SPH_J1_Z1 = 4.493409457909064175307880927280699513055
ANNULUS_0_HALF_Z1 = 6.246061839191384410154847152932891677112


def test_frozen_values_reproduce_from_oracles():
    assert float(sign_scan_bisect(lambda z: j_series(0, z), 2, 3)) == J0_Z1
    assert float(sign_scan_bisect(lambda z: j_series(1, z), 3, 4.5)) == J1_Z1
    assert float(sign_scan_bisect(y0_series, 0.5, 1.5)) == Y0_Z1


# --- evaluation -----------------------------------------------------------


def test_j_at_origin():
    assert specfun.bessel_j(0, 0.0) == 1.0
    assert specfun.bessel_j(2.5, 0.0) == 0.0


def test_j_half_at_pi_vanishes():
    assert specfun.bessel_j(0.5, math.pi) == pytest.approx(0.0, abs=1e-15)


def test_j0_at_first_zero():
    assert abs(specfun.bessel_j(0, J0_Z1)) <= 1e-12


def test_y_half_at_half_pi_vanishes():
    assert specfun.bessel_y(0.5, math.pi / 2) == pytest.approx(0.0, abs=1e-15)


def test_y0_at_first_zero():
    assert abs(specfun.bessel_y(0, Y0_Z1)) <= 1e-10


def test_y_diverges_at_origin():
    assert specfun.bessel_y(0, 1e-8) < -10
    assert specfun.bessel_y(3, 1e-3) < -1e9


@pytest.mark.parametrize(
    "nu, z",
    [(0, 0.3), (0, 7.5), (0.5, 2.0), (1, 11.0), (2.5, 20.0), (7.25, 3.0), (20, 30.0), (40, 55.5), (100, 150.0), (3, 900.0)],
)
def test_j_matches_mpmath_to_contract(nu, z):
    ref = float(mp.besselj(nu, z))
    assert specfun.bessel_j(nu, z) == pytest.approx(ref, rel=1e-12, abs=1e-300)


@pytest.mark.parametrize("nu, z", [(0, 0.4), (0.5, 3.0), (1, 11.0), (2.5, 20.0), (20, 30.0), (40, 70.0)])
def test_y_matches_mpmath(nu, z):
    assert specfun.bessel_y(nu, z) == pytest.approx(float(mp.bessely(nu, z)), rel=1e-12)


@pytest.mark.parametrize("nu, z", [(0, 1.7), (1.5, 4.2), (3, 12.0)])
def test_j_matches_power_series_oracle(nu, z):
    assert specfun.bessel_j(nu, z) == pytest.approx(float(j_series(nu, z)), rel=1e-12)


def test_y0_matches_series_oracle():
    for z in (0.2, 1.0, 4.0, 9.0):
        assert specfun.bessel_y(0, z) == pytest.approx(float(y0_series(z)), rel=1e-11)


def test_vectorised_evaluation():
    z = np.linspace(0.1, 10, 7)
    out = specfun.bessel_j(1.5, z)
    assert out.shape == z.shape
    assert out[3] == specfun.bessel_j(1.5, z[3])


@pytest.mark.parametrize(
    "call",
    [
        lambda: specfun.bessel_j(-1, 1.0),
        lambda: specfun.bessel_j(1, -0.1),
        lambda: specfun.bessel_y(1, 0.0),
        lambda: specfun.bessel_y(0, -2.0),
        lambda: specfun.spherical_j(0, 0.0),
        lambda: specfun.spherical_j(1.5, 1.0),
        lambda: specfun.bessel_j_zero(1, 0),
        lambda: specfun.annulus_det(0, 1.0, 2.0),
        lambda: specfun.annulus_det(0, 0.5, -2.0),
    ],
)
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_overflow_is_explicit():
    with pytest.raises(specfun.EvaluationOverflowError):
        specfun.bessel_y(200, 1e-3)


# --- derivatives -----------------------------------------------------------


def test_derivatives_at_origin():
    assert specfun.bessel_j_prime(0, 0.0) == 0.0
    assert specfun.bessel_j_prime(1, 0.0) == 0.5
    assert specfun.bessel_j_prime(3, 0.0) == 0.0


def test_j_half_prime_against_finite_difference():
    x = math.pi / 2
    fd = central_difference(lambda t: specfun.bessel_j(0.5, t), x)
    assert specfun.bessel_j_prime(0.5, x) == pytest.approx(fd, abs=1e-8)
    # closed form: d/dz sqrt(2/(pi z)) sin z at pi/2 is -sqrt(2/(pi z)) / (2z)
    assert specfun.bessel_j_prime(0.5, x) == pytest.approx(-math.sqrt(2 / (math.pi * x)) / (2 * x), rel=1e-13)


@pytest.mark.parametrize("nu", [0, 0.5, 1, 2.75, 10])
def test_y_prime_against_finite_difference(nu):
    x = 6.3
    fd = central_difference(lambda t: specfun.bessel_y(nu, t), x)
    assert specfun.bessel_y_prime(nu, x) == pytest.approx(fd, abs=1e-8)


def test_wronskian_example():
    w = specfun.bessel_j(2, 5.0) * specfun.bessel_y_prime(2, 5.0) - specfun.bessel_j_prime(2, 5.0) * specfun.bessel_y(2, 5.0)
    assert w == pytest.approx(2 / (math.pi * 5), abs=1e-12)


# --- spherical ---------------------------------------------------------------


def test_spherical_examples():
    assert specfun.spherical_j(0, math.pi) == pytest.approx(0.0, abs=1e-16)
    assert specfun.spherical_j(0, math.pi / 2) == pytest.approx(2 / math.pi, rel=1e-15)
    assert abs(specfun.spherical_j(1, SPH_J1_Z1)) <= 1e-10


@pytest.mark.parametrize("z", [0.3, 1.0, 2.7, 10.0, 44.0])
def test_spherical_closed_forms(z):
    assert specfun.spherical_j(0, z) == pytest.approx(math.sin(z) / z, abs=1e-12)
    assert specfun.spherical_j(1, z) == pytest.approx(math.sin(z) / z**2 - math.cos(z) / z, abs=1e-12)


# --- zeros -----------------------------------------------------------------


def test_zero_examples():
    assert specfun.bessel_j_zero(0.5, 3).z == pytest.approx(3 * math.pi, abs=1e-12)
    assert specfun.bessel_j_zero(0, 1).z == pytest.approx(J0_Z1, abs=1e-12)
    assert specfun.bessel_j_zero(1, 1).z == pytest.approx(J1_Z1, abs=1e-12)


def test_mcmahon_guess_is_only_a_guess():
    # McMahon is poor for large order and low index; the scan still gets it right
    z = specfun.bessel_j_zero(60, 1).z
    assert abs(specfun.mcmahon_guess(60, 1) - z) > 1.0
    assert z == pytest.approx(float(mp.besseljzero(60, 1)), abs=1e-11)


@pytest.mark.parametrize("nu, n", [(0, 17), (2.5, 4), (13, 7), (37.5, 2), (100, 1), (100, 1000), (0.3, 250)])
def test_zeros_match_mpmath(nu, n):
    ref = float(mp.besseljzero(mp.mpf(nu), n))
    assert specfun.bessel_j_zero(nu, n).z == pytest.approx(ref, rel=1e-13)


def test_zeros_below_matches_individual_zeros():
    zs = specfun.bessel_j_zeros_below(3.5, 40.0)
    assert len(zs) > 5 and zs[-1] <= 40.0
    for i, z in enumerate(zs, start=1):
        assert z == pytest.approx(specfun.bessel_j_zero(3.5, i).z, rel=4e-16)
    assert len(specfun.bessel_j_zeros_below(30.0, 25.0)) == 0


def test_zero_residual_invariant():
    for nu in (0, 0.5, 4, 19.5):
        for n in (1, 5, 30):
            zero = specfun.bessel_j_zero(nu, n)
            slope = specfun.bessel_j_prime(nu, zero.z)
            assert abs(specfun.bessel_j(nu, zero.z)) <= 1e-12 * max(1.0, abs(slope) * zero.z)


# --- annulus -----------------------------------------------------------------


def test_annulus_closed_form_half_order():
    assert specfun.annulus_det(0.5, 0.5, 2 * math.pi) == pytest.approx(0.0, abs=1e-10)
    for kR in (1.0, 3.3, 7.9):
        closed = -2 / math.pi * math.sin(kR * 0.5) / (kR * math.sqrt(0.5))
        assert specfun.annulus_det(0.5, 0.5, kR) == pytest.approx(closed, rel=1e-12)


def test_annulus_nearly_coincident_walls():
    for kR in (2.0, 9.0, 31.0):
        assert abs(specfun.annulus_det(0, 0.999, kR)) < 1e-3 * abs(specfun.bessel_y(0, kR) + 1)


def test_annulus_zero_examples():
    assert specfun.annulus_zero(0.5, 0.5, 1).z == pytest.approx(2 * math.pi, abs=1e-10)
    assert specfun.annulus_zero(0.5, 0.5, 2).z == pytest.approx(4 * math.pi, abs=1e-10)
    z = specfun.annulus_zero(0, 0.5, 1).z
    assert z == pytest.approx(ANNULUS_0_HALF_Z1, abs=1e-8)
    assert abs(specfun.annulus_det(0, 0.5, z)) <= 1e-8


def test_annulus_zeros_ordered_and_consistent():
    zs = specfun.annulus_zeros_below(2, 0.3, 40.0)
    assert np.all(np.diff(zs) > 0)
    for i, z in enumerate(zs, start=1):
        assert z == pytest.approx(specfun.annulus_zero(2, 0.3, i).z, abs=1e-12)


def test_annulus_against_mpmath():
    nu, f = 3, 0.25
    det = lambda k: mp.besselj(nu, k) * mp.bessely(nu, f * k) - mp.besselj(nu, f * k) * mp.bessely(nu, k)  # noqa: E731
    for n in (1, 2, 3):
        z = specfun.annulus_zero(nu, f, n).z
        ref = mp.findroot(det, z)
        assert z == pytest.approx(float(ref), abs=1e-11)


# --- invariants (property based) -------------------------------------------

orders = st.sampled_from([0.0, 0.5, 1.0, 1.5, 5.0, 20.0])
arguments = st.floats(min_value=0.1, max_value=500.0)


@settings(max_examples=300, deadline=None)
@given(nu=orders, z=arguments)
def test_wronskian_property(nu, z):
    w = specfun.bessel_j(nu, z) * specfun.bessel_y_prime(nu, z) - specfun.bessel_j_prime(nu, z) * specfun.bessel_y(nu, z)
    assert w == pytest.approx(2 / (math.pi * z), rel=1e-10)


@settings(max_examples=300, deadline=None)
@given(nu=st.floats(min_value=1.0, max_value=60.0), z=st.floats(min_value=0.1, max_value=500.0))
def test_recurrence_property(nu, z):
    lhs = specfun.bessel_j(nu - 1, z) + specfun.bessel_j(nu + 1, z)
    rhs = 2 * nu / z * specfun.bessel_j(nu, z)
    scale = max(abs(lhs), abs(specfun.bessel_j(nu - 1, z)), abs(specfun.bessel_j(nu + 1, z)), 1e-300)
    assert abs(lhs - rhs) <= 1e-10 * scale


def _spherical_closed(n, z):
    # upward recurrence from the elementary j_0, j_1 (fine for z > n)
    j_prev, j_cur = math.sin(z) / z, math.sin(z) / z**2 - math.cos(z) / z
    if n == 0:
        return j_prev
    for k in range(1, n):
        j_prev, j_cur = j_cur, (2 * k + 1) / z * j_cur - j_prev
    return j_cur


@settings(max_examples=200, deadline=None)
@given(n=st.integers(min_value=0, max_value=4), z=st.floats(min_value=5.0, max_value=200.0))
def test_half_integer_reduction(n, z):
    direct = specfun.bessel_j(n + 0.5, z)
    reduced = math.sqrt(2 * z / math.pi) * _spherical_closed(n, z)
    assert direct == pytest.approx(reduced, abs=1e-11)


def test_zero_interlacing():
    for nu in np.arange(0.0, 10.5, 0.5):
        for n in range(1, 12):
            a = specfun.bessel_j_zero(nu, n).z
            b = specfun.bessel_j_zero(nu + 1, n).z
            c = specfun.bessel_j_zero(nu, n + 1).z
            assert a < b < c


def test_zero_monotone_in_order():
    grid = np.linspace(0.0, 10.0, 201)
    for n in (1, 2, 5):
        zs = [specfun.bessel_j_zero(nu, n).z for nu in grid]
        assert np.all(np.diff(zs) > 0)
