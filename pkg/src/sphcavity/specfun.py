"""Scalar special functions for spherical-cavity mode calculations.

Spherical Bessel functions of the first kind, half-integer-order Bessel
functions, associated Legendre functions, and scalar spherical harmonics
in the two phase conventions used throughout the package.

All evaluators are pure, accept scalars or numpy arrays, and are safe for
unrestricted concurrent use.
"""

from __future__ import annotations

import enum
import math

import numpy as np

__all__ = [
    "HarmonicConvention",
    "spherical_bessel_j",
    "bessel_j_halfint",
    "legendre_plm",
    "scalar_harmonic",
    "small_argument_j",
]

MAX_BESSEL_ORDER = 60

# threshold below which the ascending series is used instead of the
# closed trigonometric forms / downward recurrence (cancellation guard)
def _series_cutoff(l: int) -> float:
    return max(1.0, 0.5 * math.sqrt(2 * l + 3))


def _odd_double_factorial(n: int) -> float:
    """(n)!! for odd n >= -1, as a float."""
    out = 1.0
    for k in range(n, 1, -2):
        out *= k
    return out


def _series_jl(l: int, x: np.ndarray) -> np.ndarray:
    # j_l(x) = x^l sum_k (-x^2/2)^k / (k! (2l+2k+1)!!), fast for x^2 < 2l+3
    term = x**l / _odd_double_factorial(2 * l + 1)
    total = term.copy()
    half_sq = -0.5 * x * x
    for k in range(1, 80):
        term = term * half_sq / (k * (2 * l + 2 * k + 1))
        total += term
        if np.all(np.abs(term) <= 1e-17 * np.maximum(np.abs(total), 1e-300)):
            break
    return total


def _trig_jl(l: int, x: np.ndarray) -> np.ndarray:
    s, c = np.sin(x), np.cos(x)
    if l == 0:
        return s / x
    if l == 1:
        return s / x**2 - c / x
    return (3.0 / x**2 - 1.0) * s / x - 3.0 * c / x**2


def _downward_jl(l: int, x: np.ndarray) -> np.ndarray:
    # Miller's algorithm: unnormalized downward recurrence seeded high above
    # both l and x, normalized against the closed forms for j_0 / j_1.
    start = max(l, int(np.ceil(np.max(x)))) + 40
    f_hi = np.zeros_like(x)
    f_lo = np.full_like(x, 1e-30)
    f_l = f_lo.copy() if start == l else None
    for k in range(start, 0, -1):
        f_hi, f_lo = f_lo, (2 * k + 1) / x * f_lo - f_hi
        if k - 1 == l:
            f_l = f_lo.copy()
        big = np.abs(f_lo) > 1e250
        if np.any(big):
            scale = np.where(big, 1e-250, 1.0)
            f_lo = f_lo * scale
            f_hi = f_hi * scale
            if f_l is not None:
                f_l = f_l * scale
    # f_lo = unnormalized j_0, f_hi = unnormalized j_1
    j0 = np.sin(x) / x
    j1 = np.sin(x) / x**2 - np.cos(x) / x
    use0 = np.abs(f_lo) >= np.abs(f_hi)
    ratio = np.where(use0, j0 / np.where(use0, f_lo, 1.0),
                     j1 / np.where(use0, 1.0, f_hi))
    return f_l * ratio


def spherical_bessel_j(l: int, x):
    """Spherical Bessel function of the first kind j_l(x).

    Regular at the origin: j_0(0) = 1 and j_l(0) = 0 for l > 0.  Closed
    trigonometric forms are used for l <= 2, a normalized downward
    recurrence for l >= 3, and an ascending series near the origin.

    Parameters
    ----------
    l : int
        Order, 0 <= l <= 60.  Relative accuracy is ~1e-13 for l <= 20
        and x <= 100.
    x : float or array_like
        Argument(s), must be >= 0.

    Returns
    -------
    float or ndarray
    """
    if not isinstance(l, (int, np.integer)) or l < 0 or l > MAX_BESSEL_ORDER:
        raise ValueError(f"order must be an integer in [0, {MAX_BESSEL_ORDER}], got {l}")
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if np.any(arr < 0) or not np.all(np.isfinite(arr)):
        raise ValueError("argument must be finite and non-negative")
    out = np.empty_like(arr)
    small = arr < _series_cutoff(l)
    if np.any(small):
        out[small] = _series_jl(l, arr[small])
    big = ~small
    if np.any(big):
        xb = arr[big]
        out[big] = _trig_jl(l, xb) if l <= 2 else _downward_jl(l, xb)
    return out[0] if scalar else out


def bessel_j_halfint(two_nu: int, x):
    """Bessel function of the first kind J_nu(x) for half-integer nu.

    The order is passed as ``two_nu`` = 2*nu, which must be an odd
    positive integer; J_{l+1/2}(x) = sqrt(2x/pi) * j_l(x).
    """
    if not isinstance(two_nu, (int, np.integer)) or two_nu < 1 or two_nu % 2 == 0:
        raise ValueError(f"two_nu must be an odd positive integer, got {two_nu}")
    l = (two_nu - 1) // 2
    arr = np.asarray(x, dtype=float)
    return np.sqrt(2.0 * arr / np.pi) * spherical_bessel_j(l, arr)


def legendre_plm(l: int, m: int, x):
    """Associated Legendre function P_l^m(x) (Ferrers, no phase factor).

    Upward recurrence in l from the sectoral seed; stable for the orders
    used here (l <= ~64).  Requires 0 <= m <= l and |x| <= 1.
    """
    if not (0 <= m <= l):
        raise ValueError(f"need 0 <= m <= l, got l={l}, m={m}")
    xa = np.asarray(x, dtype=float)
    somx2 = np.sqrt(np.maximum(0.0, 1.0 - xa * xa))
    pmm = np.full_like(xa, _odd_double_factorial(2 * m - 1)) * somx2**m
    if l == m:
        return pmm
    pm1 = (2 * m + 1) * xa * pmm
    if l == m + 1:
        return pm1
    for ll in range(m + 2, l + 1):
        pmm, pm1 = pm1, ((2 * ll - 1) * xa * pm1 - (ll + m - 1) * pmm) / (ll - m)
    return pm1


class HarmonicConvention(enum.Enum):
    """Phase convention for the scalar spherical harmonics.

    CONDON_SHORTLEY is the textbook convention.  LANDAU_LIFSHITZ multiplies
    it by i^l; the moduli and the orthonormality relation are identical.
    """

    CONDON_SHORTLEY = "condon-shortley"
    LANDAU_LIFSHITZ = "landau-lifshitz"


def scalar_harmonic(l: int, m: int, theta, phi,
                    convention: HarmonicConvention = HarmonicConvention.CONDON_SHORTLEY):
    """Scalar spherical harmonic Y_lm(theta, phi).

    Parameters
    ----------
    l, m : int
        Degree and order, |m| <= l.
    theta, phi : float or array_like
        Polar and azimuthal angles in radians (broadcast together).
    convention : HarmonicConvention
        CONDON_SHORTLEY (default) or LANDAU_LIFSHITZ (extra i^l).

    Returns
    -------
    complex or ndarray of complex
    """
    if abs(m) > l:
        raise ValueError(f"|m| must not exceed l, got l={l}, m={m}")
    th, ph = np.broadcast_arrays(np.asarray(theta, dtype=float),
                                 np.asarray(phi, dtype=float))
    am = abs(m)
    lognorm = 0.5 * (math.log(2 * l + 1) - math.log(4 * math.pi)
                     + math.lgamma(l - am + 1) - math.lgamma(l + am + 1))
    norm = math.exp(lognorm)
    phase = (-1.0) ** m if m > 0 else 1.0
    val = phase * norm * legendre_plm(l, am, np.cos(th)) * np.exp(1j * m * ph)
    if convention is HarmonicConvention.LANDAU_LIFSHITZ:
        val = val * 1j**l
    return val[()] if np.isscalar(theta) and np.isscalar(phi) else val


def small_argument_j(j: int, x, order: int = 0):
    """Leading small-argument behaviour of j_j(x).

    Returns x^j / (2j+1)!!  (equivalently x^j * 2^(-1-j) sqrt(pi) /
    Gamma(j + 3/2), evaluated through the double-factorial closed form),
    with the first series correction 1 - x^2/(2(2j+3)) when order=1.
    Relative error against the full j_j is O(x^2).
    """
    if j < 0:
        raise ValueError("order j must be >= 0")
    if order not in (0, 1):
        raise ValueError("correction order must be 0 or 1")
    xa = np.asarray(x, dtype=float)
    lead = xa**j / _odd_double_factorial(2 * j + 1)
    if order == 1:
        lead = lead * (1.0 - xa * xa / (2.0 * (2 * j + 3)))
    return lead if lead.ndim else lead[()]
