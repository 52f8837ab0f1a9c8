"""Quadrature engines and the cross-cutting property-check suite.

Every check returns a :class:`CheckReport`; :func:`run_suite` executes
the default battery (orthonormality, parity, helicity eigen-equations,
Bessel identities, plane-wave expansions, rotation algebra, mode
boundary/energy checks, entanglement catalog checks) with one report per
named check, aggregated in name order.  Tolerances live in
``DEFAULT_TOLERANCES`` and can be overridden per name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import entangle as ent
from . import modes as md
from .angular import (
    antipode,
    helicity_apply,
    helicity_vsh,
    unit_radial,
    vsh,
    vsh_coupled,
)
from .reporting import CheckReport
from .rotations import (
    euler_to_rotation_matrix,
    rotate_cartesian,
    spherical_wave_helicity,
    wigner_d_matrix,
)
from .specfun import (
    HarmonicConvention,
    bessel_j_halfint,
    scalar_harmonic,
    spherical_bessel_j,
)

__all__ = [
    "SphereQuadrature",
    "sphere_quadrature",
    "radial_quadrature",
    "CheckReport",
    "DEFAULT_TOLERANCES",
    "MAGNETIC_REFERENCE_TABLE",
    "ELECTRIC_REFERENCE_TABLE",
    "MAGNETIC_TABLE_SKIPPED_ROOTS",
    "vsh_project",
    "run_suite",
    "suite_check_names",
]

# --------------------------------------------------------------------------
# reference frequency tables (dimensionless x = omega R / c)
#
# The magnetic reference list is reproduced as published even though its
# j = 1, 2, 3 rows each skip one true root of the defining equation; the
# solver finds the complete sequences and the skipped values are recorded
# below and surfaced in the mode_tables check report.
MAGNETIC_REFERENCE_TABLE = {
    1: (4.49341, 7.72525, 10.9041, 17.2208),
    2: (5.76346, 12.3229, 15.5146, 18.689),
    3: (6.98793, 10.4171, 13.698, 20.1218),
    4: (8.18256, 11.7049, 15.0397, 18.3013),
}
ELECTRIC_REFERENCE_TABLE = {
    1: (2.74371, 6.11676, 9.31662, 12.4859),
    2: (3.87024, 7.44309, 10.713, 13.9205),
    3: (4.97342, 8.72175, 12.0636, 15.3136),
    4: (6.06195, 9.96755, 13.3801, 16.6742),
}
MAGNETIC_TABLE_SKIPPED_ROOTS = {1: 14.06619, 2: 9.09501, 3: 16.92362}

TABLE_RELATIVE_TOLERANCE = 5e-5

DEFAULT_TOLERANCES = {
    "bessel_integral": 1e-9,
    "bessel_recurrences": 1e-8,
    "completeness": 1e-10,
    "cross_products": 1e-13,
    "dmatrix_golden": 1e-12,
    "dmatrix_unitarity": 1e-12,
    "dual_condition": 0.5,
    "entangle_catalog": 0.5,
    "entangle_factorization": 1e-14,
    "helicity_eigen": 1e-12,
    "mode_boundary": 1e-7,
    "mode_energy": 1e-8,
    "mode_equipartition": 1e-6,
    "mode_tables": TABLE_RELATIVE_TOLERANCE,
    "orthonormality_coupled": 1e-11,
    "orthonormality_eml": 1e-11,
    "orthonormality_helicity": 1e-11,
    "orthonormality_scalar": 1e-12,
    "orthonormality_spherical_wave": 1e-11,
    "parity": 1e-12,
    "plane_wave_expansion": 1e-10,
    "quadrature_convergence": 1.0,
    "vsh_fourier": 1e-9,
    "vsh_linear_combinations": 1e-12,
}


# --------------------------------------------------------------------------
# quadrature


@dataclass(frozen=True)
class SphereQuadrature:
    """Gauss-Legendre (in cos theta) x uniform-phi product rule.

    Exact for spherical-harmonic products with combined degree up to the
    rule's design degree.  ``integrate`` accepts values sampled on the
    (theta, phi) meshgrid with those two axes last.
    """

    theta: np.ndarray
    theta_weights: np.ndarray
    phi: np.ndarray
    phi_weight: float

    @property
    def grid(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.theta, self.phi, indexing="ij")

    @property
    def weights(self) -> np.ndarray:
        return self.theta_weights[:, None] * self.phi_weight * np.ones_like(self.phi)[None, :]

    def integrate(self, values) -> complex:
        v = np.asarray(values)
        return (v * self.weights).sum(axis=(-2, -1))


def sphere_quadrature(degree: int) -> SphereQuadrature:
    """Product rule exact for Y_lm Y_l'm'* integrands with l + l' <= degree."""
    if not 0 <= degree <= 64:
        raise ValueError("degree must be in [0, 64]")
    n_theta = degree // 2 + 2
    n_phi = degree + 3
    nodes, weights = leggauss(n_theta)
    return SphereQuadrature(
        theta=np.arccos(nodes),
        theta_weights=weights,
        phi=2 * np.pi * np.arange(n_phi) / n_phi,
        phi_weight=2 * np.pi / n_phi,
    )


def radial_quadrature(n: int, r_max: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [0, r_max]."""
    nodes, weights = leggauss(n)
    return 0.5 * r_max * (nodes + 1.0), 0.5 * r_max * weights


def _tol(name: str, overrides: dict | None) -> float:
    if overrides and name in overrides:
        return float(overrides[name])
    return DEFAULT_TOLERANCES[name]


# --------------------------------------------------------------------------
# angular-algebra checks


def _family_functions(family: str, l_max: int):
    """(label, callable(theta_grid, phi_grid) -> samples) for a Gram family."""
    fns = []
    if family == "scalar":
        for l in range(l_max + 1):
            for m in range(-l, l + 1):
                fns.append(((l, m), lambda t, p, l=l, m=m: scalar_harmonic(l, m, t, p)))
    elif family == "coupled":
        for j in range(0, l_max + 1):
            for l in (j - 1, j, j + 1):
                if l < 0 or l > l_max + 1 or (l == 0 and j == 0):
                    continue
                for m in range(-j, j + 1):
                    fns.append(((j, l, m),
                                lambda t, p, j=j, l=l, m=m: vsh_coupled(j, l, m, t, p)))
    elif family == "eml":
        for kind in ("E", "M", "L"):
            j_lo = 1 if kind in ("E", "M") else 0
            for j in range(j_lo, l_max + 1):
                for m in range(-j, j + 1):
                    fns.append(((kind, j, m),
                                lambda t, p, k=kind, j=j, m=m: vsh(k, j, m, t, p)))
    elif family == "helicity":
        for lam in (+1, 0, -1):
            j_lo = 1 if lam else 0
            for j in range(j_lo, l_max + 1):
                for m in range(-j, j + 1):
                    fns.append(((lam, j, m),
                                lambda t, p, lam=lam, j=j, m=m: helicity_vsh(lam, j, m, t, p)))
    elif family == "spherical_wave":
        for lam in (+1, -1):
            for j in range(1, l_max + 1):
                for m in range(-j, j + 1):
                    fns.append(((lam, j, m),
                                lambda t, p, lam=lam, j=j, m=m:
                                _sample_spherical_wave(j, m, lam, t, p)))
    else:
        raise ValueError(f"unknown family {family!r}")
    return fns


def _sample_spherical_wave(j, m, lam, theta_grid, phi_grid):
    out = np.empty((3,) + theta_grid.shape, dtype=complex)
    for it in range(theta_grid.shape[0]):
        for ip in range(theta_grid.shape[1]):
            out[:, it, ip] = spherical_wave_helicity(j, m, lam,
                                                     theta_grid[it, ip], phi_grid[it, ip])
    return out


def check_orthonormality(family: str, l_max: int,
                         tolerance: float | None = None) -> CheckReport:
    """Max |Gram - identity| entry over one basis family (sphere quadrature)."""
    if l_max > 8:
        raise ValueError("l_max must be <= 8")
    tol = tolerance if tolerance is not None else DEFAULT_TOLERANCES[f"orthonormality_{family}"]
    quad = sphere_quadrature(2 * (l_max + 2) + 2)
    tg, pg = quad.grid
    fns = _family_functions(family, l_max)
    samples = [f(tg, pg) for _, f in fns]
    resid = 0.0
    for a, fa in enumerate(samples):
        for b in range(a, len(samples)):
            fb = samples[b]
            integrand = (np.conj(fa) * fb)
            if integrand.ndim == 3:  # vector family: dot the components
                integrand = integrand.sum(axis=0)
            g = quad.integrate(integrand)
            resid = max(resid, abs(g - (1.0 if a == b else 0.0)))
    return CheckReport(f"orthonormality_{family}", float(resid), tol,
                       details=f"{len(fns)} functions, l_max={l_max}")


def check_parity(l_max: int = 4, tolerance: float | None = None) -> CheckReport:
    """Parity eigenvalues: scalar (-1)^l; E and L carry (-1)^j, M carries
    (-1)^(j+1) under the vector parity operation (P V)(n) = -V(-n)."""
    tol = _tol("parity", None) if tolerance is None else tolerance
    rng = np.random.default_rng(20260810)
    th = rng.uniform(0.1, np.pi - 0.1, 24)
    ph = rng.uniform(0.0, 2 * np.pi, 24)
    tha, pha = antipode(th, ph)
    resid = 0.0
    for l in range(l_max + 1):
        for m in range(-l, l + 1):
            for conv in HarmonicConvention:
                ya = scalar_harmonic(l, m, tha, pha, conv)
                y0 = scalar_harmonic(l, m, th, ph, conv)
                resid = max(resid, float(np.abs(ya - (-1.0) ** l * y0).max()))
    parities = {"E": lambda j: (-1.0) ** j, "M": lambda j: (-1.0) ** (j + 1),
                "L": lambda j: (-1.0) ** j}
    for kind, pfun in parities.items():
        j_lo = 1 if kind in ("E", "M") else 0
        for j in range(j_lo, l_max + 1):
            for m in range(-j, j + 1):
                flipped = -vsh(kind, j, m, tha, pha)
                resid = max(resid, float(np.abs(flipped - pfun(j) * vsh(kind, j, m, th, ph)).max()))
    return CheckReport("parity", float(resid), tol,
                       details="scalar and E/M/L vector parity eigenvalues")


def check_helicity_eigen(l_max: int = 4, tolerance: float | None = None) -> CheckReport:
    """(S.n) Y^(lam) = lam Y^(lam) pointwise, and (S.n)^2 = 1 on transverse."""
    tol = _tol("helicity_eigen", None) if tolerance is None else tolerance
    rng = np.random.default_rng(20260811)
    th = rng.uniform(0.1, np.pi - 0.1, 16)
    ph = rng.uniform(0.0, 2 * np.pi, 16)
    resid = 0.0
    for j in range(1, l_max + 1):
        for m in range(-j, j + 1):
            for lam in (+1, 0, -1):
                y = helicity_vsh(lam, j, m, th, ph)
                resid = max(resid, float(np.abs(helicity_apply(th, ph, y) - lam * y).max()))
                if lam:
                    twice = helicity_apply(th, ph, helicity_apply(th, ph, y))
                    resid = max(resid, float(np.abs(twice - y).max()))
    return CheckReport("helicity_eigen", float(resid), tol,
                       details=f"helicity eigen-equation up to j={l_max}")


def check_vsh_linear_combinations(n_dirs: int = 100, seed: int = 3,
                                  tolerance: float | None = None) -> CheckReport:
    """E/M/L as fixed linear combinations of the coupled harmonics Y_jlm."""
    tol = _tol("vsh_linear_combinations", None) if tolerance is None else tolerance
    rng = np.random.default_rng(seed)
    th = rng.uniform(0.05, np.pi - 0.05, n_dirs)
    ph = rng.uniform(0.0, 2 * np.pi, n_dirs)
    resid = 0.0
    for j in range(1, 5):
        a, b = math.sqrt(j / (2 * j + 1)), math.sqrt((j + 1) / (2 * j + 1))
        for m in range(-j, j + 1):
            yp = vsh_coupled(j, j + 1, m, th, ph)
            ym_ = vsh_coupled(j, j - 1, m, th, ph)
            resid = max(resid, float(np.abs(vsh("E", j, m, th, ph) - (a * yp + b * ym_)).max()))
            resid = max(resid, float(np.abs(vsh("L", j, m, th, ph) - (a * ym_ - b * yp)).max()))
            resid = max(resid, float(np.abs(vsh("M", j, m, th, ph)
                                            - vsh_coupled(j, j, m, th, ph)).max()))
            # radial/tangential structure
            n = unit_radial(th, ph)
            yl = vsh("L", j, m, th, ph)
            y_sc = scalar_harmonic(j, m, th, ph)
            resid = max(resid, float(np.abs((n * yl).sum(axis=0) - y_sc).max()))
            resid = max(resid, float(np.abs((n * vsh("E", j, m, th, ph)).sum(axis=0)).max()))
    return CheckReport("vsh_linear_combinations", float(resid), tol,
                       details=f"{n_dirs} random directions, j <= 4")


def check_cross_products(tolerance: float | None = None) -> CheckReport:
    """n x Y^E = i Y^M and Y^E = -i (n x Y^M), pointwise."""
    tol = _tol("cross_products", None) if tolerance is None else tolerance
    rng = np.random.default_rng(11)
    th = rng.uniform(0.05, np.pi - 0.05, 40)
    ph = rng.uniform(0.0, 2 * np.pi, 40)
    n = unit_radial(th, ph)
    resid = 0.0
    for j in range(1, 5):
        for m in range(-j, j + 1):
            ye = vsh("E", j, m, th, ph)
            ym = vsh("M", j, m, th, ph)
            resid = max(resid, float(np.abs(np.cross(n, ye, axis=0) - 1j * ym).max()))
            resid = max(resid, float(np.abs(-1j * np.cross(n, ym, axis=0) - ye).max()))
    return CheckReport("cross_products", float(resid), tol,
                       details="n x Y^E = iY^M and Y^E = -i n x Y^M, j <= 4")


# --------------------------------------------------------------------------
# scalar-function identities


def check_bessel_recurrences(tolerance: float | None = None) -> CheckReport:
    """Derivative recurrences j'_l = (l/x) j_l - j_{l+1} = j_{l-1} - ((l+1)/x) j_l,
    with j' from central finite differences."""
    tol = _tol("bessel_recurrences", None) if tolerance is None else tolerance
    x = np.linspace(0.5, 50.0, 199)
    resid = 0.0
    for l in range(0, 11):
        h = 1e-6 * np.maximum(1.0, x)
        deriv = (spherical_bessel_j(l, x + h) - spherical_bessel_j(l, x - h)) / (2 * h)
        jl = spherical_bessel_j(l, x)
        resid = max(resid, float(np.abs(deriv - (l / x) * jl + spherical_bessel_j(l + 1, x)).max()))
        if l >= 1:
            resid = max(resid, float(np.abs(
                deriv - spherical_bessel_j(l - 1, x) + ((l + 1) / x) * jl).max()))
    return CheckReport("bessel_recurrences", float(resid), tol,
                       details="l <= 10 on x in [0.5, 50]")


def check_bessel_integral(nu: float = 1.5, alpha_idx: int = 1, beta_idx: int = 2,
                          tolerance: float | None = None) -> CheckReport:
    """int_0^1 x J_nu(ax) J_nu(bx) dx = 0 (a != b) or J_{nu+1}(a)^2 / 2 (a = b)
    for a, b zeros of J_nu (half-integer nu)."""
    tol = _tol("bessel_integral", None) if tolerance is None else tolerance
    two_nu = int(round(2 * nu))
    if two_nu % 2 == 0 or two_nu < 1 or abs(2 * nu - two_nu) > 1e-12:
        raise ValueError("nu must be half-integer (1/2, 3/2, ...)")
    count = max(alpha_idx, beta_idx)
    zeros = md._scan_roots(lambda x: bessel_j_halfint(two_nu, x), count)
    a, b = zeros[alpha_idx - 1], zeros[beta_idx - 1]
    x, w = radial_quadrature(256, 1.0)
    val = float(np.sum(w * x * bessel_j_halfint(two_nu, a * x) * bessel_j_halfint(two_nu, b * x)))
    expected = 0.0 if alpha_idx != beta_idx else 0.5 * bessel_j_halfint(two_nu + 2, a) ** 2
    return CheckReport("bessel_integral", abs(val - expected), tol,
                       details=f"nu={nu}, zeros #{alpha_idx}, #{beta_idx}")


def check_plane_wave_expansion(k: float, r: float, dir_k, dir_r, l_max: int,
                               tolerance: float | None = None) -> CheckReport:
    """Partial-wave expansion of exp(i k.r) against the direct exponential."""
    tol = _tol("plane_wave_expansion", None) if tolerance is None else tolerance
    thk, phk = dir_k
    thr, phr = dir_r
    total = 0.0 + 0.0j
    kr = k * r
    for l in range(l_max + 1):
        jl = spherical_bessel_j(l, kr)
        for m in range(-l, l + 1):
            total += (4 * np.pi * 1j**l * jl
                      * np.conj(scalar_harmonic(l, m, thk, phk))
                      * scalar_harmonic(l, m, thr, phr))
    direct = np.exp(1j * kr * float((unit_radial(thk, phk) * unit_radial(thr, phr)).sum()))
    return CheckReport("plane_wave_expansion", abs(total - direct), tol,
                       details=f"kr={kr}, l_max={l_max}")


def check_vsh_fourier(j: int, kind: str, kr: float,
                      tolerance: float | None = None) -> CheckReport:
    """Angular transform int Y(k^) e^{i k.r} dOmega_k = g_l(kr) Y(r^) with
    g_l = 4 pi i^l j_l; the E-type maps onto the shifted-degree pair."""
    tol = _tol("vsh_fourier", None) if tolerance is None else tolerance
    if j > 4 or kr > 20:
        raise ValueError("supported range: j <= 4, kr <= 20")
    quad = sphere_quadrature(min(64, 2 * int(math.ceil(kr)) + 2 * j + 24))
    tg, pg = quad.grid
    rng = np.random.default_rng(5)
    resid = 0.0

    def g(l):
        return 4 * np.pi * 1j**l * spherical_bessel_j(l, kr)

    for _ in range(3):
        th_r = rng.uniform(0.2, np.pi - 0.2)
        ph_r = rng.uniform(0.0, 2 * np.pi)
        cosang = (unit_radial(tg, pg) * unit_radial(th_r, ph_r).reshape(3, 1, 1)).sum(axis=0)
        kernel = np.exp(1j * kr * cosang)
        for m in range(-j, j + 1):
            if kind == "scalar":
                lhs = quad.integrate(scalar_harmonic(j, m, tg, pg) * kernel)
                rhs = g(j) * scalar_harmonic(j, m, th_r, ph_r)
                scale = max(1.0, abs(rhs))
                resid = max(resid, abs(lhs - rhs) / scale)
            elif kind == "coupled":
                for l in (j - 1, j, j + 1):
                    if l < 0:
                        continue
                    lhs = quad.integrate(vsh_coupled(j, l, m, tg, pg) * kernel)
                    rhs = g(l) * vsh_coupled(j, l, m, th_r, ph_r)
                    scale = max(1.0, float(np.abs(rhs).max()))
                    resid = max(resid, float(np.abs(lhs - rhs).max()) / scale)
            elif kind == "M":
                lhs = quad.integrate(vsh(kind, j, m, tg, pg) * kernel)
                rhs = g(j) * vsh("M", j, m, th_r, ph_r)
                scale = max(1.0, float(np.abs(rhs).max()))
                resid = max(resid, float(np.abs(lhs - rhs).max()) / scale)
            elif kind == "E":
                lhs = quad.integrate(vsh(kind, j, m, tg, pg) * kernel)
                a, b = math.sqrt(j / (2 * j + 1)), math.sqrt((j + 1) / (2 * j + 1))
                rhs = (a * g(j + 1) * vsh_coupled(j, j + 1, m, th_r, ph_r)
                       + b * g(j - 1) * vsh_coupled(j, j - 1, m, th_r, ph_r))
                scale = max(1.0, float(np.abs(rhs).max()))
                resid = max(resid, float(np.abs(lhs - rhs).max()) / scale)
            else:
                raise ValueError(f"kind must be scalar/coupled/M/E, got {kind!r}")
    return CheckReport("vsh_fourier", float(resid), tol,
                       details=f"kind={kind}, j={j}, kr={kr}")


# --------------------------------------------------------------------------
# rotation checks


def check_dmatrix_unitarity(j_max: int = 8, seed: int = 9,
                            tolerance: float | None = None) -> CheckReport:
    tol = _tol("dmatrix_unitarity", None) if tolerance is None else tolerance
    rng = np.random.default_rng(seed)
    resid = 0.0
    for j in range(0, j_max + 1):
        a, b, g = rng.uniform(0, 2 * np.pi, 3)
        d = wigner_d_matrix(j, a, b, g)
        resid = max(resid, float(np.abs(d @ d.conj().T - np.eye(2 * j + 1)).max()))
        d0 = wigner_d_matrix(j, 0.0, 0.0, 0.0)
        resid = max(resid, float(np.abs(d0 - np.eye(2 * j + 1)).max()))
    return CheckReport("dmatrix_unitarity", float(resid), tol,
                       details=f"random angles, j <= {j_max}")


_GOLDEN_D1 = np.array([
    [0.5, 1.0 / math.sqrt(2), 0.5],
    [-1.0 / math.sqrt(2), 0.0, 1.0 / math.sqrt(2)],
    [0.5, -1.0 / math.sqrt(2), 0.5],
])


def check_dmatrix_golden(tolerance: float | None = None) -> CheckReport:
    """The j=1, beta=pi/2 matrix entry-for-entry, and the worked vector
    rotation x-axis -> z-axis under the quarter-turn frame rotation."""
    tol = _tol("dmatrix_golden", None) if tolerance is None else tolerance
    d = wigner_d_matrix(1, 0.0, math.pi / 2, 0.0)
    resid = float(np.abs(d - _GOLDEN_D1).max())
    rotated = rotate_cartesian([1.0, 0.0, 0.0], 0.0, math.pi / 2, 0.0)
    resid = max(resid, float(np.abs(rotated - np.array([0.0, 0.0, 1.0])).max()))
    return CheckReport("dmatrix_golden", resid, tol,
                       details="d^1(pi/2) matrix and (1,0,0)->(0,0,1) rotation")


# --------------------------------------------------------------------------
# mode checks


def check_mode_tables(tolerance: float | None = None) -> CheckReport:
    """Reproduce the reference frequency tables.

    Electric entries must match the computed sequence positionally
    (n = 1..4).  Magnetic entries are checked as members of the computed
    sequence, because the published magnetic rows j = 1, 2, 3 each skip
    one true root (14.06619, 9.09501, 16.92362 respectively); the check
    confirms those skipped roots are present in the solver's output and
    reports them in the details.
    """
    tol = _tol("mode_tables", None) if tolerance is None else tolerance
    resid = 0.0
    for j, row in ELECTRIC_REFERENCE_TABLE.items():
        roots = md.find_roots("E", j, len(row))
        for n, ref in enumerate(row):
            resid = max(resid, abs(roots[n] - ref) / ref)
    skipped_found = []
    for j, row in MAGNETIC_REFERENCE_TABLE.items():
        roots = md.find_roots("M", j, 5)
        for ref in row:
            resid = max(resid, min(abs(r - ref) / ref for r in roots))
        if j in MAGNETIC_TABLE_SKIPPED_ROOTS:
            skip = MAGNETIC_TABLE_SKIPPED_ROOTS[j]
            nearest = min(roots, key=lambda r: abs(r - skip))
            resid = max(resid, abs(nearest - skip) / skip)
            skipped_found.append(f"j={j}: {nearest:.5f}")
    details = ("electric rows positional, magnetic rows by membership; "
               "roots absent from the magnetic reference rows were found at "
               + "; ".join(skipped_found))
    return CheckReport("mode_tables", float(resid), tol, details=details)


def check_dual_condition(j_max: int = 6, n_each: int = 8,
                         tolerance: float | None = None) -> CheckReport:
    """Electric and magnetic root sets are disjoint and omega^E_{j,1} <
    omega^M_{j,1} for every j <= j_max."""
    tol = _tol("dual_condition", None) if tolerance is None else tolerance
    min_dist = np.inf
    ok = True
    for j in range(1, j_max + 1):
        re = md.find_roots("E", j, n_each)
        rm = md.find_roots("M", j, n_each)
        min_dist = min(min_dist, min(abs(a - b) for a in re for b in rm))
        ok = ok and (re[0] < rm[0])
    resid = 0.0 if (ok and min_dist > 1e-6) else 1.0
    return CheckReport("dual_condition", resid, tol,
                       details=f"j <= {j_max}, min |x_E - x_M| = {min_dist:.4f}, "
                               f"lowest-root ordering {'holds' if ok else 'fails'}")


def _mode_energy_quadrature(spec: md.ModeSpec, config: md.CavityConfig,
                            n_radial: int = 200) -> float:
    """(1/2) w^2 eps0 int |A|^2 d3r by a full 3-d product quadrature."""
    j = spec.index.j
    quad = sphere_quadrature(2 * (j + 2) + 2)
    tg, pg = quad.grid
    r, wr = radial_quadrature(n_radial, config.radius)
    a = md._vector_potential(spec, r[:, None, None], tg[None, :, :], pg[None, :, :], config)
    density = (np.abs(a) ** 2).sum(axis=0)
    radial = quad.integrate(density) * r * r  # angular integral at each radius
    integral = float(np.sum(wr * radial.real))
    return 0.5 * spec.omega**2 * config.epsilon0 * integral


def check_mode_energy(j_max: int = 3, n_max: int = 3,
                      tolerance: float | None = None) -> CheckReport:
    """Quadrature energy of each normalized mode equals hbar omega."""
    tol = _tol("mode_energy", None) if tolerance is None else tolerance
    config = md.CavityConfig()
    resid = 0.0
    for tau in ("E", "M"):
        for j in range(1, j_max + 1):
            for n in range(1, n_max + 1):
                spec = md.mode_spec(tau, j, 0, n, config)
                energy = _mode_energy_quadrature(spec, config)
                resid = max(resid, abs(energy / (config.hbar * spec.omega) - 1.0))
    return CheckReport("mode_energy", float(resid), tol,
                       details=f"all modes with j <= {j_max}, n <= {n_max}")


def check_mode_equipartition(j_max: int = 2, n_max: int = 2,
                             tolerance: float | None = None) -> CheckReport:
    """Electric-part and magnetic-part field energies agree (3-d quadrature,
    numerical curl for B)."""
    tol = _tol("mode_equipartition", None) if tolerance is None else tolerance
    config = md.CavityConfig()
    mu0 = 1.0 / (config.epsilon0 * config.wave_speed**2)
    resid = 0.0
    for tau in ("E", "M"):
        for j in range(1, j_max + 1):
            for n in range(1, n_max + 1):
                spec = md.mode_spec(tau, j, 0, n, config)
                quad = sphere_quadrature(2 * (j + 2) + 4)
                tg, pg = quad.grid
                r, wr = radial_quadrature(80, config.radius)
                rr = r[:, None, None] * np.ones_like(tg)[None, :, :]
                tt = np.ones_like(r)[:, None, None] * tg[None, :, :]
                pp = np.ones_like(r)[:, None, None] * pg[None, :, :]
                a = md._vector_potential(spec, rr, tt, pp, config)
                pos = (rr * unit_radial(tt, pp)).reshape(3, -1)
                b = md._curl_fd(spec, pos, config, h=1e-4 * config.radius).reshape(a.shape)
                w3 = (wr[:, None, None] * r[:, None, None] ** 2 * quad.weights[None, :, :])
                e_elec = 0.25 * spec.omega**2 * config.epsilon0 * float(
                    (w3 * (np.abs(a) ** 2).sum(axis=0)).sum())
                e_mag = 0.25 / mu0 * float((w3 * (np.abs(b) ** 2).sum(axis=0)).sum())
                resid = max(resid, abs(e_mag / e_elec - 1.0))
    return CheckReport("mode_equipartition", float(resid), tol,
                       details=f"modes with j <= {j_max}, n <= {n_max}, numerical curl")


def check_mode_boundary(j_max: int = 3, n_max: int = 2, n_dirs: int = 64,
                        tolerance: float | None = None) -> CheckReport:
    tol = _tol("mode_boundary", None) if tolerance is None else tolerance
    config = md.CavityConfig()
    resid = 0.0
    worst = ""
    for tau in ("E", "M"):
        for j in range(1, j_max + 1):
            for n in range(1, n_max + 1):
                spec = md.mode_spec(tau, j, 0, n, config)
                rep = md.boundary_residual(spec, config, n_dirs=n_dirs, tolerance=tol)
                if rep.max_residual > resid:
                    resid, worst = rep.max_residual, rep.name
    return CheckReport("mode_boundary", float(resid), tol,
                       details=f"worst mode: {worst} ({n_dirs} directions each)")


# --------------------------------------------------------------------------
# completeness / projection


def vsh_project(field_fn, l_max: int,
                quadrature: SphereQuadrature | None = None):
    """Project a tangential+radial vector field onto the E/M/L basis.

    Returns (coefficients, CheckReport): a dict keyed by (kind, l, m) of
    inner products <Y^kind_lm, field>, and the reconstruction residual of
    the resummed expansion on the quadrature grid.
    """
    quad = quadrature or sphere_quadrature(2 * (l_max + 2) + 2)
    tg, pg = quad.grid
    field = np.asarray(field_fn(tg, pg), dtype=complex)
    coeffs: dict[tuple, complex] = {}
    recon = np.zeros_like(field)
    for kind in ("L", "E", "M"):
        l_lo = 0 if kind == "L" else 1
        for l in range(l_lo, l_max + 1):
            for m in range(-l, l + 1):
                basis = vsh(kind, l, m, tg, pg)
                c = quad.integrate((np.conj(basis) * field).sum(axis=0))
                coeffs[(kind, l, m)] = complex(c)
                recon = recon + c * basis
    scale = max(1.0, float(np.abs(field).max()))
    resid = float(np.abs(recon - field).max()) / scale
    report = CheckReport("vsh_projection", resid, DEFAULT_TOLERANCES["completeness"],
                         details=f"reconstruction through l={l_max}")
    return coeffs, report


def check_completeness(l_max: int = 8, seed: int = 7,
                       tolerance: float | None = None) -> CheckReport:
    """A random band-limited vector field is reproduced by projection and
    resummation over {Y^L, Y^E, Y^M}."""
    tol = _tol("completeness", None) if tolerance is None else tolerance
    rng = np.random.default_rng(seed)
    terms = []
    for kind in ("L", "E", "M"):
        l_lo = 0 if kind == "L" else 1
        for l in range(l_lo, min(4, l_max) + 1):
            for m in range(-l, l + 1):
                terms.append((kind, l, m,
                              complex(rng.normal(), rng.normal()) / (1 + l)))

    def field(t, p):
        out = np.zeros((3,) + t.shape, dtype=complex)
        for kind, l, m, c in terms:
            out += c * vsh(kind, l, m, t, p)
        return out

    coeffs, report = vsh_project(field, l_max)
    resid = report.max_residual
    for kind, l, m, c in terms:
        resid = max(resid, abs(coeffs[(kind, l, m)] - c))
    return CheckReport("completeness", float(resid), tol,
                       details=f"{len(terms)} random components, projection through l={l_max}")


def check_quadrature_convergence(tolerance: float | None = None) -> CheckReport:
    """Doubling the rule degree must not grow a representative residual by
    more than 10x (guards against accidental exactness)."""
    tol = _tol("quadrature_convergence", None) if tolerance is None else tolerance

    def gram_resid(degree):
        quad = sphere_quadrature(degree)
        tg, pg = quad.grid
        resid = 0.0
        for (la, ma), (lb, mb) in (((3, 1), (3, 1)), ((4, -2), (2, 1)), ((2, 0), (4, 0))):
            g = quad.integrate(np.conj(scalar_harmonic(la, ma, tg, pg))
                               * scalar_harmonic(lb, mb, tg, pg))
            resid = max(resid, abs(g - (1.0 if (la, ma) == (lb, mb) else 0.0)))
        return resid

    r1, r2 = gram_resid(14), gram_resid(28)
    ratio = r2 / (10.0 * r1 + 1e-15)
    return CheckReport("quadrature_convergence", float(ratio), tol,
                       details=f"residual {r1:.2e} at degree 14 vs {r2:.2e} at 28")


# --------------------------------------------------------------------------
# entanglement checks


def check_entangle_catalog(tolerance: float | None = None) -> CheckReport:
    tol = _tol("entangle_catalog", None) if tolerance is None else tolerance
    parts = ent.enumerate_partitions()
    catalog = ent.enumerate_catalog()
    ids = [e.identifier for e in catalog]
    ok = (len(parts) == 10
          and sum(1 for p in parts if len(p.alpha_fields) == 1) == 4
          and sum(1 for p in parts if len(p.alpha_fields) == 2) == 6
          and len(catalog) == 40 and len(set(ids)) == 40)
    return CheckReport("entangle_catalog", 0.0 if ok else 1.0, tol,
                       details=f"{len(parts)} partitions, {len(catalog)} catalog entries")


def check_entangle_factorization(tolerance: float | None = None) -> CheckReport:
    """Every catalog entry built with distinct labels passes the Bell
    factorization and exchange-symmetry checks; the antisymmetric
    construction with equal spectator labels symmetrizes to zero."""
    tol = _tol("entangle_factorization", None) if tolerance is None else tolerance
    values = {"tau": ("E", "M"), "omega": (1, 2), "j": (1, 2), "m": (0, 1)}
    resid = 0.0
    for entry in ent.enumerate_catalog():
        p = entry.partition
        alpha = tuple(tuple(values[f][i] for f in p.alpha_fields) for i in (0, 1))
        gamma = tuple(tuple(values[f][i] for f in p.gamma_fields) for i in (0, 1))
        state = ent.build_state(p, entry.bell, alpha, gamma)
        rep = ent.factorization_check(state, p, entry.bell, alpha, gamma, tolerance=tol)
        resid = max(resid, rep.max_residual)
    # degenerate antisymmetric construction must vanish
    p0 = ent.partition_by_id("omega")
    try:
        ent.build_state(p0, "psi-minus", ((1,), (2,)), (("E", 1, 0), ("E", 1, 0)))
        resid = max(resid, 1.0)
        zero_note = "MISSED degenerate zero state"
    except ent.DegenerateStateError:
        zero_note = "degenerate psi-minus construction correctly reported as zero"
    return CheckReport("entangle_factorization", float(resid), tol,
                       details=f"all 40 catalog entries; {zero_note}")


# --------------------------------------------------------------------------
# suite driver

_SUITE_BUILDERS = {
    "bessel_integral": lambda tol, seed: check_bessel_integral(1.5, 1, 2, tolerance=tol),
    "bessel_recurrences": lambda tol, seed: check_bessel_recurrences(tolerance=tol),
    "completeness": lambda tol, seed: check_completeness(seed=seed, tolerance=tol),
    "cross_products": lambda tol, seed: check_cross_products(tolerance=tol),
    "dmatrix_golden": lambda tol, seed: check_dmatrix_golden(tolerance=tol),
    "dmatrix_unitarity": lambda tol, seed: check_dmatrix_unitarity(seed=seed, tolerance=tol),
    "dual_condition": lambda tol, seed: check_dual_condition(tolerance=tol),
    "entangle_catalog": lambda tol, seed: check_entangle_catalog(tolerance=tol),
    "entangle_factorization": lambda tol, seed: check_entangle_factorization(tolerance=tol),
    "helicity_eigen": lambda tol, seed: check_helicity_eigen(tolerance=tol),
    "mode_boundary": lambda tol, seed: check_mode_boundary(tolerance=tol),
    "mode_energy": lambda tol, seed: check_mode_energy(tolerance=tol),
    "mode_equipartition": lambda tol, seed: check_mode_equipartition(tolerance=tol),
    "mode_tables": lambda tol, seed: check_mode_tables(tolerance=tol),
    "orthonormality_coupled": lambda tol, seed: check_orthonormality("coupled", 4, tolerance=tol),
    "orthonormality_eml": lambda tol, seed: check_orthonormality("eml", 4, tolerance=tol),
    "orthonormality_helicity": lambda tol, seed: check_orthonormality("helicity", 4, tolerance=tol),
    "orthonormality_scalar": lambda tol, seed: check_orthonormality("scalar", 6, tolerance=tol),
    "orthonormality_spherical_wave": lambda tol, seed: check_orthonormality("spherical_wave", 4, tolerance=tol),
    "parity": lambda tol, seed: check_parity(tolerance=tol),
    "plane_wave_expansion": lambda tol, seed: check_plane_wave_expansion(
        2.0, 1.0, (0.7, 1.3), (2.1, 5.0), 20, tolerance=tol),
    "quadrature_convergence": lambda tol, seed: check_quadrature_convergence(tolerance=tol),
    "vsh_fourier": lambda tol, seed: max(
        (check_vsh_fourier(jj, kk, krkr, tolerance=tol)
         for jj, kk, krkr in ((0, "scalar", 1.0), (1, "M", 2.5), (2, "E", 3.0),
                              (2, "coupled", 2.0))),
        key=lambda r: r.max_residual),
    "vsh_linear_combinations": lambda tol, seed: check_vsh_linear_combinations(
        seed=seed, tolerance=tol),
}


def suite_check_names() -> list[str]:
    return sorted(_SUITE_BUILDERS)


def run_suite(only: list[str] | None = None,
              tolerances: dict[str, float] | None = None,
              seed: int = 12345) -> list[CheckReport]:
    """Run the named checks (all by default) and return reports in name order.

    ``only`` filters by substring match against check names; ``tolerances``
    overrides individual entries of DEFAULT_TOLERANCES.
    """
    names = suite_check_names()
    if only:
        names = [n for n in names if any(f in n for f in only)]
        if not names:
            raise ValueError(f"no checks match filters {only!r}")
    reports = []
    for name in names:
        tol = _tol(name, tolerances)
        reports.append(_SUITE_BUILDERS[name](tol, seed))
    return reports
