"""Independent reference routes used to derive and freeze expected values.

Nothing here touches scipy or the package under test: the series are summed
term by term in mpmath arithmetic and roots are found by plain bisection.
"""

import mpmath as mp

mp.mp.dps = 40


def j_series(nu, z):
    """Ascending power series for J_nu(z)."""
    nu, z = mp.mpf(nu), mp.mpf(z)
    half = z / 2
    total = mp.mpf(0)
    k = 0
    while True:
        term = (-1) ** k * half ** (2 * k + nu) / (mp.factorial(k) * mp.gamma(k + nu + 1))
        total += term
        if k > 5 and abs(term) < mp.mpf(10) ** (-35) * max(1, abs(total)):
            return total
        k += 1


def y0_series(z):
    """Neumann series for Y_0(z)."""
    z = mp.mpf(z)
    half2 = (z / 2) ** 2
    total = mp.mpf(0)
    harmonic = mp.mpf(0)
    k = 1
    while True:
        harmonic += mp.mpf(1) / k
        term = (-1) ** (k + 1) * harmonic * half2**k / mp.factorial(k) ** 2
        total += term
        if k > 5 and abs(term) < mp.mpf(10) ** (-35):
            break
        k += 1
    return 2 / mp.pi * ((mp.log(z / 2) + mp.euler) * j_series(0, z) + total)


def sign_scan_bisect(f, a, b, tol=mp.mpf(10) ** -30, steps=200):
    """Scan ``[a, b]`` for the first sign change, then bisect it to ``tol``."""
    a, b = mp.mpf(a), mp.mpf(b)
    grid = [a + (b - a) * i / steps for i in range(steps + 1)]
    vals = [f(x) for x in grid]
    for lo, hi, flo, fhi in zip(grid, grid[1:], vals, vals[1:]):
        if flo == 0:
            return lo
        if flo * fhi < 0:
            break
    else:
        raise ValueError("no sign change")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def central_difference(f, x, h=1e-5):
    return (f(x + h) - f(x - h)) / (2 * h)
