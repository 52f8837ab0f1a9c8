"""Vector spherical harmonics and the spin-1 angular algebra.

Provides the covariant spherical basis vectors, Cartesian <-> spherical
component conversion, the closed-form Clebsch-Gordan table for coupling
an orbital harmonic with a spin-1 basis vector, the coupled vector
spherical harmonics Y_jlm, the electric/magnetic/longitudinal series,
helicity eigenfunctions, and the helicity operator.

Conventions
-----------
Scalar harmonics feeding the vector layer use the Condon-Shortley phase
(no i^l), and the basis vectors e_mu carry Condon-Shortley phases.  With
these choices all of the following hold exactly and are enforced by the
test suite:

* Y^M_jm = Y_jjm = L Y_jm / sqrt(j(j+1))
* Y^E_jm = (angular gradient of Y_jm) / sqrt(j(j+1))
         = sqrt(j/(2j+1)) Y_{j,j+1,m} + sqrt((j+1)/(2j+1)) Y_{j,j-1,m}
* Y^L_jm = rhat Y_jm
         = sqrt(j/(2j+1)) Y_{j,j-1,m} - sqrt((j+1)/(2j+1)) Y_{j,j+1,m}
* n x Y^E = i Y^M  and  n x Y^M = i Y^E  (so Y^E = -i n x Y^M)
* (S.n) Y^E = -Y^M, (S.n) Y^M = -Y^E, hence the helicity eigenfunctions
  are the circular combinations built from Y^E and its cross-product
  partner n x Y^E:  Y^(+1) = -(Y^E + i(n x Y^E))/sqrt(2) = -(Y^E - Y^M)/sqrt(2)
  and Y^(-1) = (Y^E - i(n x Y^E))/sqrt(2) = (Y^E + Y^M)/sqrt(2).

Vector-valued results put the Cartesian component axis FIRST: shape
(3,) for scalar angles, (3, ...) for broadcast angle arrays.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .specfun import HarmonicConvention, scalar_harmonic

__all__ = [
    "Direction",
    "antipode",
    "unit_radial",
    "unit_theta",
    "unit_phi",
    "spherical_basis_vector",
    "cartesian_to_spherical_components",
    "spherical_to_cartesian_components",
    "cg_s1",
    "vsh_coupled",
    "vsh",
    "helicity_vsh",
    "helicity_apply",
]

_SQ2 = math.sqrt(2.0)


class Direction(NamedTuple):
    """A point on the unit sphere: polar angle theta, azimuth phi (radians)."""

    theta: float
    phi: float

    def antipode(self) -> "Direction":
        return Direction(math.pi - self.theta, (self.phi + math.pi) % (2 * math.pi))

    def unit_vector(self) -> np.ndarray:
        return unit_radial(self.theta, self.phi)


def antipode(theta, phi):
    """Angles of the antipodal direction: theta -> pi - theta, phi -> phi + pi."""
    return np.pi - np.asarray(theta, dtype=float), np.mod(np.asarray(phi, dtype=float) + np.pi, 2 * np.pi)


def unit_radial(theta, phi):
    th, ph = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    st = np.sin(th)
    return np.stack([st * np.cos(ph), st * np.sin(ph), np.cos(th)])


def unit_theta(theta, phi):
    th, ph = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    return np.stack([np.cos(th) * np.cos(ph), np.cos(th) * np.sin(ph), -np.sin(th)])


def unit_phi(theta, phi):
    th, ph = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    return np.stack([-np.sin(ph), np.cos(ph), np.zeros_like(ph)])


_E_SPH = {
    +1: np.array([-1.0 / _SQ2, -1j / _SQ2, 0.0]),
    0: np.array([0.0, 0.0, 1.0], dtype=complex),
    -1: np.array([1.0 / _SQ2, -1j / _SQ2, 0.0]),
}


def spherical_basis_vector(mu: int) -> np.ndarray:
    """Covariant spherical basis vector e_mu, mu in {+1, 0, -1}.

    e_{+1} = -(e_x + i e_y)/sqrt(2), e_0 = e_z, e_{-1} = (e_x - i e_y)/sqrt(2)
    (Condon-Shortley phases); pairwise orthonormal under the Hermitian
    inner product.
    """
    if mu not in (+1, 0, -1):
        raise ValueError(f"mu must be +1, 0 or -1, got {mu}")
    return _E_SPH[mu].copy()


def cartesian_to_spherical_components(v) -> np.ndarray:
    """Covariant spherical components [V_{+1}, V_0, V_{-1}] of a vector.

    V_{+1} = -(V_x + i V_y)/sqrt(2), V_0 = V_z, V_{-1} = (V_x - i V_y)/sqrt(2).
    Accepts shape (3,) or (3, ...); norm-preserving.
    """
    v = np.asarray(v, dtype=complex)
    return np.stack([-(v[0] + 1j * v[1]) / _SQ2, v[2], (v[0] - 1j * v[1]) / _SQ2])


def spherical_to_cartesian_components(c) -> np.ndarray:
    """Inverse of :func:`cartesian_to_spherical_components`."""
    c = np.asarray(c, dtype=complex)
    vx = (c[2] - c[0]) / _SQ2
    vy = 1j * (c[2] + c[0]) / _SQ2
    return np.stack([vx, vy, c[1]])


def cg_s1(l: int, j: int, mu: int, m: int) -> float:
    """Clebsch-Gordan coefficient <l, 1; m-mu, mu | j, m> for spin-1 coupling.

    Closed-form table for coupling an orbital degree l (first factor) with
    a spin-1 index mu (second factor) to total j in {l-1, l, l+1}.  Returns
    0.0 when a magnetic quantum number is out of range.
    """
    if mu not in (+1, 0, -1):
        raise ValueError(f"mu must be +1, 0 or -1, got {mu}")
    if l < 0 or j not in (l - 1, l, l + 1) or j < 0 or (l == 0 and j == 0):
        raise ValueError(f"no spin-1 coupling of orbital l={l} to total j={j}")
    if abs(m) > j or abs(m - mu) > l:
        return 0.0
    if j == l + 1:
        if mu == +1:
            return math.sqrt((l + m) * (l + m + 1) / ((2 * l + 1) * (2 * l + 2)))
        if mu == 0:
            return math.sqrt((l - m + 1) * (l + m + 1) / ((2 * l + 1) * (l + 1)))
        return math.sqrt((l - m) * (l - m + 1) / ((2 * l + 1) * (2 * l + 2)))
    if j == l:
        if mu == +1:
            return -math.sqrt((l + m) * (l - m + 1) / (2 * l * (l + 1)))
        if mu == 0:
            return m / math.sqrt(l * (l + 1))
        return math.sqrt((l - m) * (l + m + 1) / (2 * l * (l + 1)))
    # j == l - 1
    if mu == +1:
        return math.sqrt((l - m) * (l - m + 1) / (2 * l * (2 * l + 1)))
    if mu == 0:
        return -math.sqrt((l - m) * (l + m) / (l * (2 * l + 1)))
    return math.sqrt((l + m) * (l + m + 1) / (2 * l * (2 * l + 1)))


def _shape_of(theta, phi):
    return np.broadcast(np.asarray(theta, float), np.asarray(phi, float)).shape


def vsh_coupled(j: int, l: int, m: int, theta, phi) -> np.ndarray:
    """Coupled vector spherical harmonic Y_jlm(theta, phi).

    Y_jlm = sum_mu <l, 1; m-mu, mu | j, m> e_mu Y_{l, m-mu}, a simultaneous
    eigenfunction of J^2, J_z, L^2 and S^2 with eigenvalues j(j+1), m,
    l(l+1), 2.  Returns zeros when |m| > j.
    """
    if l < 0 or l not in (j - 1, j, j + 1) or (l == 0 and j == 0):
        raise ValueError(f"l must be one of j-1, j, j+1 with a valid spin-1 "
                         f"coupling, got j={j}, l={l}")
    out = np.zeros((3,) + _shape_of(theta, phi), dtype=complex)
    if abs(m) > j:
        return out
    for mu in (+1, 0, -1):
        if abs(m - mu) > l:
            continue
        coef = cg_s1(l, j, mu, m)
        if coef == 0.0:
            continue
        y = scalar_harmonic(l, m - mu, theta, phi, HarmonicConvention.CONDON_SHORTLEY)
        out += coef * _E_SPH[mu].reshape((3,) + (1,) * (out.ndim - 1)) * np.asarray(y)
    return out


_AB_CACHE: dict[int, tuple[float, float]] = {}


def _ab(j: int) -> tuple[float, float]:
    if j not in _AB_CACHE:
        _AB_CACHE[j] = (math.sqrt(j / (2 * j + 1)), math.sqrt((j + 1) / (2 * j + 1)))
    return _AB_CACHE[j]


def vsh(kind: str, j: int, m: int, theta, phi) -> np.ndarray:
    """Electric, magnetic or longitudinal vector spherical harmonic.

    Parameters
    ----------
    kind : {"E", "M", "L"}
        Electric (parity (-1)^j, tangential), magnetic (parity
        (-1)^(j+1), tangential) or longitudinal (parity (-1)^j, radial).
    j, m : int
        Total angular momentum and projection; j >= 1 for "E"/"M"
        (the j=0 members vanish identically), j >= 0 for "L".
    theta, phi : float or array_like

    Returns
    -------
    ndarray, shape (3, ...) complex Cartesian components.
    """
    kind = str(kind).upper()
    if kind not in ("E", "M", "L"):
        raise ValueError(f"kind must be 'E', 'M' or 'L', got {kind!r}")
    if kind in ("E", "M") and j < 1:
        raise ValueError(f"the {kind}-type harmonic vanishes identically for j={j}; need j >= 1")
    if j < 0 or abs(m) > j:
        raise ValueError(f"need j >= 0 and |m| <= j, got j={j}, m={m}")
    if kind == "M":
        return vsh_coupled(j, j, m, theta, phi)
    a, b = _ab(j)
    if kind == "E":
        return a * vsh_coupled(j, j + 1, m, theta, phi) + b * vsh_coupled(j, j - 1, m, theta, phi)
    # longitudinal; for j = 0 only the l = j+1 term contributes
    out = -b * vsh_coupled(j, j + 1, m, theta, phi)
    if j >= 1:
        out += a * vsh_coupled(j, j - 1, m, theta, phi)
    return out


def helicity_vsh(lam: int, j: int, m: int, theta, phi) -> np.ndarray:
    """Vector spherical harmonic helicity eigenfunction Y^(lam)_jm.

    Built from the electric harmonic and its cross-product partner
    n x Y^E (which equals i Y^M):

        Y^(+1) = -(Y^E + i (n x Y^E))/sqrt(2) = -(Y^E - Y^M)/sqrt(2)
        Y^(-1) =  (Y^E - i (n x Y^E))/sqrt(2) =  (Y^E + Y^M)/sqrt(2)
        Y^(0)  =  Y^L

    Satisfies (S.n) Y^(lam) = lam Y^(lam) pointwise; the three families
    are mutually orthonormal on the unit sphere.
    """
    if lam not in (+1, 0, -1):
        raise ValueError(f"helicity must be +1, 0 or -1, got {lam}")
    if lam == 0:
        return vsh("L", j, m, theta, phi)
    ye = vsh("E", j, m, theta, phi)
    ym = vsh("M", j, m, theta, phi)
    if lam == +1:
        return -(ye - ym) / _SQ2
    return (ye + ym) / _SQ2


def helicity_apply(theta, phi, vec) -> np.ndarray:
    """Apply the helicity operator (S . n) about the axis n(theta, phi).

    For a spin-1 (vector) field this is i (n x v); transverse circular
    polarizations are eigenvectors with eigenvalue +-1, the radial
    direction with eigenvalue 0.
    """
    v = np.asarray(vec, dtype=complex)
    n = unit_radial(theta, phi)
    n = np.broadcast_to(n.reshape((3,) + (1,) * (v.ndim - 1)) if n.ndim == 1 else n, v.shape)
    return 1j * np.cross(n, v, axis=0)
