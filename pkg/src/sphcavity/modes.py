"""The cavity eigenproblem for a vacuum sphere bounded by a perfect conductor.

Root conditions for the allowed magnetic and electric multipole
frequencies, the discrete spectrum, mode normalization constants fixing
the single-photon energy, vector-potential / E / B field evaluation,
boundary-condition residuals, and occupation-number energy bookkeeping.

There are two distinct frequency conditions (x = omega R / c):

    magnetic (tau = "M"):  J_{j+1/2}(x) = 0
    electric (tau = "E"):  j J_{j+3/2}(x) - (j+1) J_{j-1/2}(x) = 0

The electric condition is equivalent to d/dx [x j_j(x)] = 0, so electric
and magnetic roots strictly interlace and the two sets never coincide.
All root finding happens in the dimensionless variable x; cavity
dimensions and physical constants enter only through CavityConfig.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

import numpy as np
from scipy.optimize import brentq

from .angular import unit_phi, unit_radial, unit_theta, vsh, vsh_coupled
from .reporting import CheckReport
from .specfun import bessel_j_halfint, spherical_bessel_j

__all__ = [
    "TAU_ELECTRIC",
    "TAU_MAGNETIC",
    "CavityConfig",
    "ModeIndex",
    "ModeSpec",
    "FieldSample",
    "HamiltonianResult",
    "RootFindingError",
    "magnetic_root_equation",
    "electric_root_equation",
    "find_roots",
    "normalization_constant",
    "mode_spec",
    "spectrum",
    "mode_field",
    "boundary_residual",
    "hamiltonian_energy",
    "fibonacci_directions",
]

TAU_ELECTRIC = "E"
TAU_MAGNETIC = "M"

_SI_C = 299792458.0
_SI_HBAR = 1.054571817e-34
_SI_EPS0 = 8.8541878128e-12


class RootFindingError(RuntimeError):
    """Raised when a frequency root cannot be bracketed or refined."""


@dataclass(frozen=True)
class CavityConfig:
    """Cavity radius and physical constants.

    Defaults are the dimensionless convention R = c = hbar = epsilon0 = 1;
    the dimensionless roots x = omega R / c are independent of all four.
    """

    radius: float = 1.0
    wave_speed: float = 1.0
    hbar: float = 1.0
    epsilon0: float = 1.0

    def __post_init__(self):
        for name in ("radius", "wave_speed", "hbar", "epsilon0"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")

    @classmethod
    def si(cls, radius_m: float) -> "CavityConfig":
        """SI-unit configuration for a cavity of the given radius in metres."""
        return cls(radius=radius_m, wave_speed=_SI_C, hbar=_SI_HBAR, epsilon0=_SI_EPS0)


class ModeIndex(NamedTuple):
    """Mode label (tau, j, m, n): multipole type, angular momentum,
    projection, and root ordinal (n = 1 is the lowest root)."""

    tau: str
    j: int
    m: int
    n: int


@dataclass(frozen=True)
class ModeSpec:
    """A resolved cavity mode: label, dimensionless root, frequency and
    normalization constant (identical for all m at fixed tau, j, n)."""

    index: ModeIndex
    x_root: float
    omega: float
    norm_const: float

    @property
    def degeneracy(self) -> int:
        return 2 * self.index.j + 1


@dataclass(frozen=True)
class FieldSample:
    """Field values of one mode at given positions (component axis first)."""

    r: np.ndarray
    theta: np.ndarray
    phi: np.ndarray
    A: np.ndarray
    E: np.ndarray
    B: np.ndarray


class HamiltonianResult(NamedTuple):
    energy: float
    photon_count: int


def _validate_tau(tau: str) -> str:
    t = str(tau).upper()
    if t not in (TAU_ELECTRIC, TAU_MAGNETIC):
        raise ValueError(f"tau must be 'E' or 'M', got {tau!r}")
    return t


def magnetic_root_equation(j: int, x):
    """J_{j+1/2}(x); its positive zeros are the magnetic mode frequencies."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return bessel_j_halfint(2 * j + 1, x)


def electric_root_equation(j: int, x):
    """j J_{j+3/2}(x) - (j+1) J_{j-1/2}(x); zeros give electric frequencies."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return j * bessel_j_halfint(2 * j + 3, x) - (j + 1) * bessel_j_halfint(2 * j - 1, x)


_SCAN_STEP = math.pi / 8.0
_SCAN_BLOCK = 512


def _scan_roots(f, count: int, x_start: float = 1e-9) -> list[float]:
    """First `count` positive roots by sign-change scan + Brent refinement.

    The scan step pi/8 is far below the minimum root spacing of the
    Bessel-type equations handled here (asymptotically pi), so no root
    is skipped; a tangency (no sign change at a suspected root) would
    surface as a convergence failure downstream rather than be skipped
    silently.
    """
    roots: list[float] = []
    a = x_start
    fa = float(f(a))
    block_start = a
    while len(roots) < count:
        xs = block_start + _SCAN_STEP * np.arange(1, _SCAN_BLOCK + 1)
        if xs[-1] > 1e4:
            raise RootFindingError(
                f"failed to bracket root {len(roots) + 1} below x = 1e4")
        fs = np.asarray(f(xs), dtype=float)
        prev_x, prev_f = a, fa
        for x, fx in zip(xs, fs):
            if len(roots) >= count:
                break
            if fx == 0.0:
                roots.append(float(x))
            elif np.sign(fx) != np.sign(prev_f):
                try:
                    roots.append(brentq(lambda t: float(f(t)), prev_x, x,
                                        xtol=1e-12, rtol=4 * np.finfo(float).eps))
                except ValueError as exc:  # pragma: no cover
                    raise RootFindingError(
                        f"refinement failed in bracket ({prev_x}, {x})") from exc
            prev_x, prev_f = x, fx
        a, fa = float(xs[-1]), float(fs[-1])
        block_start = a
    return roots


_ROOT_CACHE: dict[tuple[str, int, int], tuple[float, ...]] = {}


def find_roots(tau: str, j: int, count: int) -> list[float]:
    """First `count` dimensionless roots x = omega R / c for multipole (tau, j).

    Strictly increasing, each refined to better than 1e-10.  Electric and
    magnetic sequences are cross-validated against each other: the n-th
    electric root must lie strictly between consecutive zeros of x j_j(x)
    (interlacing), which guards against any skipped root.
    """
    tau = _validate_tau(tau)
    if j < 1:
        raise ValueError("j must be >= 1")
    if not 1 <= count <= 64:
        raise ValueError("count must be in [1, 64]")
    key = (tau, j, count)
    if key in _ROOT_CACHE:
        return list(_ROOT_CACHE[key])

    if tau == TAU_MAGNETIC:
        roots = _scan_roots(lambda x: magnetic_root_equation(j, x), count)
        # interlacing: J_{nu} and J_{nu+1} zeros alternate, so the number of
        # J_{nu+1} zeros below the count-th root must be exactly count - 1
        aux = _scan_roots(lambda x: bessel_j_halfint(2 * j + 3, x), count)
        below = sum(1 for r in aux if r < roots[-1])
        if below != count - 1:
            raise RootFindingError(
                f"interlacing violated for M j={j}: {below} companion zeros "
                f"below root {count}")
    else:
        roots = _scan_roots(lambda x: electric_root_equation(j, x), count)
        # electric roots are the extrema of x j_j(x): exactly one between
        # consecutive magnetic roots (and one below the first)
        mag = _scan_roots(lambda x: magnetic_root_equation(j, x), count)
        fences = [0.0] + mag
        for n, r in enumerate(roots):
            if not fences[n] < r < fences[n + 1]:
                raise RootFindingError(
                    f"interlacing violated for E j={j}: root {n + 1} = {r} "
                    f"not in ({fences[n]}, {fences[n + 1]})")
    gaps = np.diff(roots)
    if len(gaps) and (np.any(gaps <= 0) or np.any(gaps > 2.5 * math.pi)):
        raise RootFindingError(f"implausible root spacing for {tau} j={j}: {gaps}")
    _ROOT_CACHE[key] = tuple(roots)
    return roots


def _norm_prefactor(config: CavityConfig) -> float:
    return math.sqrt(8.0 * config.hbar / (math.pi * config.epsilon0 * config.wave_speed)) / config.radius


def normalization_constant(tau: str, j: int, x_root: float,
                           config: CavityConfig = CavityConfig()) -> float:
    """Mode amplitude making the field energy equal one photon, hbar*omega.

    magnetic:  sqrt(8 hbar / (pi eps0 c)) / R / |J_{j+3/2}(x)|
    electric:  sqrt(8 hbar / (pi eps0 c)) / R
               * x / (sqrt((2j+1) (x^2 - j(j+1))) |J_{j+1/2}(x)|)

    The electric form is the closed result of the radial energy integral
    evaluated at a root of the electric condition (where J_{j-1/2} =
    j J_{j+1/2} / x and J_{j+3/2} = (j+1) J_{j+1/2} / x); it is verified
    against brute-force quadrature of the energy integral in the tests.
    """
    tau = _validate_tau(tau)
    if j < 1:
        raise ValueError("j must be >= 1")
    x = float(x_root)
    eq = magnetic_root_equation(j, x) if tau == TAU_MAGNETIC else electric_root_equation(j, x)
    if abs(eq) > 1e-4:
        raise ValueError(f"x_root={x} does not satisfy the {tau} condition for j={j}")
    if tau == TAU_MAGNETIC:
        den = abs(bessel_j_halfint(2 * j + 3, x))
        if den < 1e-14:
            raise ValueError("degenerate normalization denominator")
        return _norm_prefactor(config) / den
    den = math.sqrt((2 * j + 1) * (x * x - j * (j + 1))) * abs(bessel_j_halfint(2 * j + 1, x))
    if den < 1e-14:
        raise ValueError("degenerate normalization denominator")
    return _norm_prefactor(config) * x / den


def mode_spec(tau: str, j: int, m: int, n: int,
              config: CavityConfig = CavityConfig()) -> ModeSpec:
    """Resolve a mode label to its root, frequency and normalization."""
    tau = _validate_tau(tau)
    if abs(m) > j:
        raise ValueError(f"|m| must not exceed j, got j={j}, m={m}")
    if n < 1:
        raise ValueError("root ordinal n must be >= 1")
    x = find_roots(tau, j, n)[n - 1]
    return ModeSpec(
        index=ModeIndex(tau, j, m, n),
        x_root=x,
        omega=config.wave_speed * x / config.radius,
        norm_const=normalization_constant(tau, j, x, config),
    )


def spectrum(j_max: int, n_max: int,
             config: CavityConfig = CavityConfig()) -> list[ModeSpec]:
    """All modes with j <= j_max, n <= n_max, sorted by increasing frequency.

    One entry per (tau, j, n); each carries the (2j+1)-fold m-degeneracy.
    Ties break deterministically: electric first, then j, then n.
    """
    if not 1 <= j_max <= 20:
        raise ValueError("j_max must be in [1, 20]")
    if not 1 <= n_max <= 32:
        raise ValueError("n_max must be in [1, 32]")
    out: list[ModeSpec] = []
    for tau in (TAU_ELECTRIC, TAU_MAGNETIC):
        for j in range(1, j_max + 1):
            for n, x in enumerate(find_roots(tau, j, n_max), start=1):
                out.append(ModeSpec(
                    index=ModeIndex(tau, j, 0, n),
                    x_root=x,
                    omega=config.wave_speed * x / config.radius,
                    norm_const=normalization_constant(tau, j, x, config),
                ))
    out.sort(key=lambda s: (s.omega, 0 if s.index.tau == TAU_ELECTRIC else 1,
                            s.index.j, s.index.n))
    return out


def _vector_potential(spec: ModeSpec, r, theta, phi,
                      config: CavityConfig) -> np.ndarray:
    """A(r, theta, phi) for one mode, shape (3, ...); valid for any r >= 0."""
    tau, j, m, _ = spec.index
    k = spec.omega / config.wave_speed
    rr, th, ph = np.broadcast_arrays(np.asarray(r, float),
                                     np.asarray(theta, float),
                                     np.asarray(phi, float))
    x = k * rr
    if tau == TAU_MAGNETIC:
        return spec.norm_const * spherical_bessel_j(j, x) * vsh("M", j, m, th, ph)
    return spec.norm_const * (
        math.sqrt(j) * spherical_bessel_j(j + 1, x) * vsh_coupled(j, j + 1, m, th, ph)
        - math.sqrt(j + 1) * spherical_bessel_j(j - 1, x) * vsh_coupled(j, j - 1, m, th, ph)
    )


def _potential_at_cartesian(spec: ModeSpec, pos: np.ndarray,
                            config: CavityConfig) -> np.ndarray:
    rr = np.sqrt((pos * pos).sum(axis=0))
    safe = np.maximum(rr, 1e-300)
    th = np.arccos(np.clip(pos[2] / safe, -1.0, 1.0))
    ph = np.mod(np.arctan2(pos[1], pos[0]), 2 * np.pi)
    return _vector_potential(spec, rr, th, ph, config)


def _curl_fd(spec: ModeSpec, pos: np.ndarray, config: CavityConfig,
             h: float) -> np.ndarray:
    """curl A by central differences with one Richardson step (h and h/2)."""
    out = np.zeros(pos.shape, dtype=complex)
    for hh, weight in ((h, -1.0 / 3.0), (h / 2.0, 4.0 / 3.0)):
        partial = {}
        for axis in range(3):
            e = np.zeros((3,) + (1,) * (pos.ndim - 1))
            e[axis] = hh
            partial[axis] = (_potential_at_cartesian(spec, pos + e, config)
                             - _potential_at_cartesian(spec, pos - e, config)) / (2 * hh)
        curl = np.stack([
            partial[1][2] - partial[2][1],
            partial[2][0] - partial[0][2],
            partial[0][1] - partial[1][0],
        ])
        out += weight * curl
    return out


def mode_field(spec: ModeSpec, r, theta, phi,
               config: CavityConfig = CavityConfig()) -> FieldSample:
    """Vector potential A, electric field E = i omega A, and B = curl A.

    Positions broadcast together; 0 <= r <= R.  The curl is numerical
    (central differences, base step 1e-4 R, one Richardson step), good
    to ~1e-9 relative of the peak field.
    """
    rr, th, ph = np.broadcast_arrays(np.asarray(r, float),
                                     np.asarray(theta, float),
                                     np.asarray(phi, float))
    if np.any(rr < 0) or np.any(rr > config.radius * (1 + 1e-12)):
        raise ValueError("positions must satisfy 0 <= r <= R")
    a = _vector_potential(spec, rr, th, ph, config)
    pos = rr * unit_radial(th, ph)
    b = _curl_fd(spec, pos, config, h=1e-4 * config.radius)
    return FieldSample(r=rr, theta=th, phi=ph, A=a, E=1j * spec.omega * a, B=b)


def fibonacci_directions(n: int) -> tuple[np.ndarray, np.ndarray]:
    """n quasi-uniform directions on the sphere (golden-angle spiral)."""
    i = np.arange(n)
    z = 1.0 - 2.0 * (i + 0.5) / n
    theta = np.arccos(z)
    phi = np.mod(i * math.pi * (3.0 - math.sqrt(5.0)), 2 * math.pi)
    return theta, phi


def _peak_field_scales(spec: ModeSpec, config: CavityConfig) -> tuple[float, float]:
    """Coarse-grid peak |E| and |B| used to normalize boundary residuals."""
    th, ph = fibonacci_directions(48)
    radii = np.linspace(0.04, 1.0, 25) * config.radius
    rr = radii[:, None] + 0.0 * th[None, :]
    tt = 0.0 * radii[:, None] + th[None, :]
    pp = 0.0 * radii[:, None] + ph[None, :]
    a = _vector_potential(spec, rr, tt, pp, config)
    peak_e = spec.omega * float(np.sqrt((np.abs(a) ** 2).sum(axis=0)).max())
    pos = (rr * unit_radial(tt, pp)).reshape(3, -1)
    b = _curl_fd(spec, pos, config, h=1e-4 * config.radius)
    peak_b = float(np.sqrt((np.abs(b) ** 2).sum(axis=0)).max())
    return peak_e, peak_b


def boundary_residual(spec: ModeSpec, config: CavityConfig = CavityConfig(),
                      n_dirs: int = 64, tolerance: float = 1e-7) -> CheckReport:
    """Perfect-conductor boundary check at r = R.

    Maximum over n_dirs quasi-uniform directions of the tangential
    electric field |E.theta_hat|, |E.phi_hat| and the normal magnetic
    field |B.n|, each normalized by the mode's peak field magnitude.
    """
    th, ph = fibonacci_directions(n_dirs)
    rr = np.full_like(th, config.radius)
    a = _vector_potential(spec, rr, th, ph, config)
    e = 1j * spec.omega * a
    e_th = np.abs((e * unit_theta(th, ph)).sum(axis=0))
    e_ph = np.abs((e * unit_phi(th, ph)).sum(axis=0))
    pos = config.radius * unit_radial(th, ph)
    b = _curl_fd(spec, pos, config, h=1e-4 * config.radius)
    b_n = np.abs((b * unit_radial(th, ph)).sum(axis=0))
    peak_e, peak_b = _peak_field_scales(spec, config)
    resid = max(float(e_th.max() / peak_e), float(e_ph.max() / peak_e),
                float(b_n.max() / peak_b))
    tau, j, m, n = spec.index
    return CheckReport(
        name=f"boundary_{tau}{j}n{n}",
        max_residual=resid,
        tolerance=tolerance,
        details=f"tangential E and normal B at r=R over {n_dirs} directions",
    )


def hamiltonian_energy(occupations: Mapping[ModeIndex | tuple, int],
                       include_zero_point: bool = False,
                       config: CavityConfig = CavityConfig()) -> HamiltonianResult:
    """Total energy sum(hbar omega (N + 1/2 flag)) over the listed modes.

    The zero-point half-quantum, when enabled, is counted once per listed
    mode label (the unrestricted sum over all modes diverges and is not
    represented).  Also reports the total photon number sum(N).
    """
    energy = 0.0
    photons = 0
    for key, count in occupations.items():
        idx = ModeIndex(*key)
        if count < 0:
            raise ValueError("occupation numbers must be >= 0")
        tau = _validate_tau(idx.tau)
        if idx.j < 1 or abs(idx.m) > idx.j or idx.n < 1:
            raise ValueError(f"unresolvable mode index {idx}")
        x = find_roots(tau, idx.j, idx.n)[idx.n - 1]
        omega = config.wave_speed * x / config.radius
        energy += config.hbar * omega * (count + (0.5 if include_zero_point else 0.0))
        photons += count
    return HamiltonianResult(energy=energy, photon_count=photons)
