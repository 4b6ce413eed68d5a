import math

import pytest

from circbilliard.errors import BracketError
from circbilliard.quadrature import graded_breakpoints, integrate
from circbilliard.roots import bisect, safeguarded_newton


def test_newton_finds_cosine_root():
    x = safeguarded_newton(math.cos, lambda t: -math.sin(t), 0.0, 3.0)
    assert x == pytest.approx(math.pi / 2, abs=1e-14)


def test_newton_survives_bad_derivative():
    # flat derivative at the start forces bisection steps
    f = lambda t: t**3 - 2 * t - 5  # noqa: E731
    x = safeguarded_newton(f, lambda t: 0.0, 2.0, 3.0, tol=1e-14)
    assert f(x) == pytest.approx(0.0, abs=1e-12)


def test_endpoint_roots_are_returned_exactly():
    assert safeguarded_newton(math.sin, math.cos, 0.0, 1.0) == 0.0
    assert bisect(math.sin, -1.0, 0.0) == 0.0


def test_missing_sign_change_raises():
    with pytest.raises(BracketError):
        safeguarded_newton(math.cos, lambda t: -math.sin(t), 0.0, 1.0)
    with pytest.raises(BracketError):
        bisect(math.cos, 0.0, 1.0)


@pytest.mark.parametrize(
    "f, a, b, exact",
    [
        (lambda x: x**5, 0.0, 2.0, 64 / 6),
        (lambda x: __import__("numpy").sin(x) ** 2, 0.0, math.pi, math.pi / 2),
        (lambda x: __import__("numpy").sqrt(x), 0.0, 1.0, 2 / 3),
    ],
)
def test_adaptive_gauss_legendre(f, a, b, exact):
    assert integrate(f, a, b, rtol=1e-12) == pytest.approx(exact, rel=1e-11)


def test_cusp_split_matches_exact():
    import numpy as np

    val = integrate(lambda t: np.abs(t), -1.0, 2.0, breakpoints=[-1.0, 0.0, 2.0])
    assert val == pytest.approx(2.5, rel=1e-14)


def test_graded_breakpoints_cluster_at_left():
    pts = graded_breakpoints(0.0, 1.0, levels=4)
    assert pts[0] == 0.0 and pts[-1] == 1.0
    assert list(pts) == sorted(pts)
    assert pts[1] == pytest.approx(1 / 16)


def test_reversed_interval_changes_sign():
    assert integrate(lambda x: x, 1.0, 0.0) == pytest.approx(-0.5)
