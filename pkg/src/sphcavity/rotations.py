"""Wigner D-matrices for passive rotations, and helicity wave functions.

The D-matrix convention is the passive one (rotation of the coordinate
frame): D^(j)_{m'm}(alpha, beta, gamma) = e^{i m' gamma} d^j_{m'm}(beta)
e^{i m alpha}, pinned by the j=1, beta=pi/2 golden matrix

    [[ 1/2,  1/sqrt2, 1/2],
     [-1/sqrt2, 0,    1/sqrt2],
     [ 1/2, -1/sqrt2, 1/2]]

(rows m' = +1, 0, -1; columns m = +1, 0, -1).  Covariant spherical
components of a vector transform as V' = D^(1) V; coefficient vectors of
functions expanded in Y_jm transform with conj(D^(j)).  An active
rotation is the passive rotation with inverted angles,
(alpha, beta, gamma) -> (-gamma, -beta, -alpha).

Matrices are indexed with m', m DESCENDING from +j to -j; use
:func:`m_index` or :func:`wigner_entry` to address entries by quantum
number.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .angular import (
    cartesian_to_spherical_components,
    spherical_basis_vector,
    spherical_to_cartesian_components,
)

__all__ = [
    "MAX_WIGNER_J",
    "m_index",
    "wigner_entry",
    "wigner_small_d",
    "wigner_d_matrix",
    "inverse_angles",
    "euler_to_rotation_matrix",
    "rotation_matrix_to_euler",
    "rotate_spherical",
    "rotate_cartesian",
    "rotate_jm_coefficients",
    "helicity_polarization_vector",
    "spherical_wave_helicity",
    "plane_to_spherical_coefficient",
]

MAX_WIGNER_J = 20


def m_index(j: int, m: int) -> int:
    """Row/column index of quantum number m in a (2j+1) matrix (m = j..-j)."""
    if abs(m) > j:
        raise ValueError(f"|m| must not exceed j, got j={j}, m={m}")
    return j - m


def wigner_entry(matrix: np.ndarray, j: int, m_prime: int, m: int):
    """Entry D^(j)_{m'm} of a matrix produced by this module."""
    return matrix[m_index(j, m_prime), m_index(j, m)]


def _check_j(j: int) -> None:
    if not isinstance(j, (int, np.integer)) or j < 0 or j > MAX_WIGNER_J:
        raise ValueError(f"j must be an integer in [0, {MAX_WIGNER_J}], got {j}")


@lru_cache(maxsize=None)
def _d_prefactor(j: int, a: int, b: int) -> float:
    return math.sqrt(float(math.factorial(j + a) * math.factorial(j - a)
                           * math.factorial(j + b) * math.factorial(j - b)))


def _small_d_element(j: int, mp: int, m: int, beta: float) -> float:
    # passive convention: transpose of the standard active Wigner sum
    a, b = mp, m  # active-formula roles swapped
    c, s = math.cos(beta / 2.0), math.sin(beta / 2.0)
    k_min = max(0, a - b)
    k_max = min(j + a, j - b)
    total = 0.0
    for k in range(k_min, k_max + 1):
        den = (math.factorial(j + a - k) * math.factorial(k)
               * math.factorial(b - a + k) * math.factorial(j - b - k))
        total += (-1.0) ** (b - a + k) / den * c ** (2 * j + a - b - 2 * k) * s ** (b - a + 2 * k)
    return _d_prefactor(j, b, a) * total


def wigner_small_d(j: int, beta: float) -> np.ndarray:
    """Real reduced rotation matrix d^j(beta), rows/cols m = j..-j."""
    _check_j(j)
    dim = 2 * j + 1
    out = np.empty((dim, dim))
    for i, mp in enumerate(range(j, -j - 1, -1)):
        for k, m in enumerate(range(j, -j - 1, -1)):
            out[i, k] = _small_d_element(j, mp, m, float(beta))
    return out


def wigner_d_matrix(j: int, alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Passive-rotation D-matrix D^(j)_{m'm} = e^{im'g} d^j_{m'm}(b) e^{im a}.

    Unitary; the identity at zero angles; j <= 20.
    """
    d = wigner_small_d(j, beta)
    mv = np.arange(j, -j - 1, -1)
    return np.exp(1j * mv[:, None] * gamma) * d * np.exp(1j * mv[None, :] * alpha)


def inverse_angles(alpha: float, beta: float, gamma: float) -> tuple[float, float, float]:
    """Euler angles of the inverse rotation (also: active from passive)."""
    return (-gamma, -beta, -alpha)


_U_CART_TO_SPH = np.array([
    [-1.0 / math.sqrt(2), -1j / math.sqrt(2), 0.0],
    [0.0, 0.0, 1.0],
    [1.0 / math.sqrt(2), -1j / math.sqrt(2), 0.0],
])


def euler_to_rotation_matrix(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Real orthogonal matrix acting on Cartesian components, V' = R V.

    Equivalent to conjugating the j=1 D-matrix by the Cartesian-to-
    spherical component map; equals Rz(gamma) Ry(beta) Rz(alpha) with
    passive single-axis blocks.
    """
    d1 = wigner_d_matrix(1, alpha, beta, gamma)
    return (_U_CART_TO_SPH.conj().T @ d1 @ _U_CART_TO_SPH).real


def rotation_matrix_to_euler(matrix: np.ndarray) -> tuple[float, float, float]:
    """Euler angles (alpha, beta, gamma) reproducing a passive rotation matrix.

    Inverse of :func:`euler_to_rotation_matrix` up to the usual gimbal
    ambiguity at beta in {0, pi} (resolved with gamma = 0).
    """
    # closed form: row 2 is (sin b cos a, -sin a sin b, cos b) and column 2
    # is (-sin b cos g, -sin b sin g, cos b)
    r = np.asarray(matrix, dtype=float)
    beta = math.atan2(math.hypot(r[2, 0], r[2, 1]), r[2, 2])
    if math.hypot(r[2, 0], r[2, 1]) > 1e-12:
        alpha = math.atan2(-r[2, 1], r[2, 0])
        gamma = math.atan2(-r[1, 2], -r[0, 2])
    elif r[2, 2] > 0:  # beta ~ 0: only alpha + gamma fixed
        alpha = math.atan2(r[1, 0], r[0, 0])
        gamma = 0.0
    else:  # beta ~ pi: only alpha - gamma fixed
        alpha = math.atan2(r[1, 0], -r[0, 0])
        gamma = 0.0
    return (alpha % (2 * math.pi), beta, gamma % (2 * math.pi))


def rotate_spherical(components, alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Rotate covariant spherical components [V+1, V0, V-1]: V' = D^(1) V."""
    c = np.asarray(components, dtype=complex)
    if c.shape != (3,):
        raise ValueError(f"expected 3 spherical components, got shape {c.shape}")
    return wigner_d_matrix(1, alpha, beta, gamma) @ c


def rotate_cartesian(v, alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Rotate Cartesian vector components into the rotated frame."""
    c = cartesian_to_spherical_components(np.asarray(v, dtype=complex))
    return spherical_to_cartesian_components(rotate_spherical(c, alpha, beta, gamma))


def rotate_jm_coefficients(j: int, coefficients, alpha: float, beta: float,
                           gamma: float) -> np.ndarray:
    """Transform expansion coefficients of a Y_jm-expanded function.

    For f = sum_m c_m Y_jm in the original frame, the same function
    expressed in the rotated frame is sum_m c'_m Y_jm with
    c' = conj(D^(j)) c.  Coefficients are ordered m = j .. -j.
    """
    c = np.asarray(coefficients, dtype=complex)
    if c.shape != (2 * j + 1,):
        raise ValueError(f"expected {2 * j + 1} coefficients for j={j}, got shape {c.shape}")
    return wigner_d_matrix(j, alpha, beta, gamma).conj() @ c


def helicity_polarization_vector(lam: int, theta, phi) -> np.ndarray:
    """Unit polarization vector e^(lam)(k) for a wave propagating along k.

    The spin basis vector e_lam actively rotated from the z-axis onto the
    direction (theta, phi): e^(lam)(k) = sum_s conj(D^(1)_{lam s}) e_s.
    Transverse (k . e = 0) for lam = +-1 and a pointwise helicity
    eigenvector, (S.k) e^(lam) = lam e^(lam); e^(0) is radial.
    """
    if lam not in (+1, 0, -1):
        raise ValueError(f"helicity must be +1, 0 or -1, got {lam}")
    d_active = wigner_d_matrix(1, float(phi), float(theta), 0.0).conj().T
    out = np.zeros(3, dtype=complex)
    for sig in (+1, 0, -1):
        out += wigner_entry(d_active, 1, sig, lam) * spherical_basis_vector(sig)
    return out


def spherical_wave_helicity(j: int, m: int, lam: int, theta, phi) -> np.ndarray:
    """Angular profile of the spherical-wave helicity eigenfunction.

    psi_jm^(lam)(k) = sqrt((2j+1)/4pi) D^(j)_{lam m}(phi, theta, 0) e^(lam)(k),
    a simultaneous eigenfunction of J^2, J_z and helicity; orthonormal
    over the unit sphere for fixed lam.  The third Euler angle is fixed
    to zero, which pins the phase.
    """
    if lam not in (+1, -1):
        raise ValueError(f"physical photon helicity must be +1 or -1, got {lam}")
    if j < 1 or abs(lam) > j:
        raise ValueError(f"need j >= |lambda| = 1, got j={j}")
    if abs(m) > j:
        raise ValueError(f"|m| must not exceed j, got j={j}, m={m}")
    dmat = wigner_d_matrix(j, float(phi), float(theta), 0.0)
    amp = math.sqrt((2 * j + 1) / (4 * math.pi)) * wigner_entry(dmat, j, lam, m)
    return amp * helicity_polarization_vector(lam, theta, phi)


def plane_to_spherical_coefficient(j: int, m: int, lam: int, theta, phi) -> complex:
    """Overlap of a plane-wave helicity state along (theta, phi) with psi_jm^(lam).

    Returns sqrt((2j+1)/4pi) * conj(D^(j)_{lam m}(phi, theta, 0)); the
    radial (same-momentum-shell) factor is not represented numerically.
    Summing coefficient * spherical_wave_helicity over j, m reproduces
    the plane-wave angular profile in the band-limited sense.
    """
    if lam not in (+1, -1):
        raise ValueError(f"physical photon helicity must be +1 or -1, got {lam}")
    if j < 1 or abs(m) > j:
        raise ValueError(f"need j >= 1 and |m| <= j, got j={j}, m={m}")
    dmat = wigner_d_matrix(j, float(phi), float(theta), 0.0)
    return math.sqrt((2 * j + 1) / (4 * math.pi)) * np.conj(wigner_entry(dmat, j, lam, m))
