"""Rotating vectors, harmonic expansions, and helicity states.

The rotation matrices here implement passive rotations (the coordinate
frame turns, the physics stays put).  Covariant spherical components
[V+1, V0, V-1] transform with the j=1 matrix; expansion coefficients of
functions written in spherical harmonics transform with its conjugate.
"""

import numpy as np

from sphcavity import (
    cartesian_to_spherical_components,
    plane_to_spherical_coefficient,
    rotate_cartesian,
    rotate_jm_coefficients,
    spherical_wave_helicity,
    wigner_d_matrix,
)

print(__doc__)

print("quarter turn of the frame about the y-axis, j = 1 matrix:")
print(np.round(wigner_d_matrix(1, 0.0, np.pi / 2, 0.0).real, 6))

v = np.array([1.0, 0.0, 0.0])
print(f"\na vector along x has spherical components "
      f"{np.round(cartesian_to_spherical_components(v), 4)}")
print(f"after the quarter turn its components are "
      f"{np.round(rotate_cartesian(v, 0.0, np.pi / 2, 0.0).real, 6)}")
print("(the old x-axis is the new z-axis, as it must be)")

print("\nrotating an expansion: a pure Y_{2,1} state through random angles")
rng = np.random.default_rng(1)
angles = rng.uniform(0, 2 * np.pi, 3)
c = np.zeros(5, dtype=complex)
c[2 - 1] = 1.0  # coefficients ordered m = j..-j
cp = rotate_jm_coefficients(2, c, *angles)
print(f"  c' = {np.round(cp, 4)}")
print(f"  norm preserved: {np.linalg.norm(cp):.12f}")

print("\nspherical-wave helicity states: expanding a plane wave")
lam, (th, ph) = +1, (1.1, 2.3)
for j in (1, 2, 3):
    row = sum(abs(plane_to_spherical_coefficient(j, m, lam, th, ph)) ** 2
              for m in range(-j, j + 1))
    print(f"  j={j}: sum_m |coefficient|^2 = {row:.6f} "
          f"(= (2j+1)/4pi = {(2 * j + 1) / (4 * np.pi):.6f})")

psi = spherical_wave_helicity(2, 1, lam, th, ph)
khat = np.array([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)])
print(f"\n  transversality of the j=2 wave at that direction: "
      f"|k.psi| = {abs((khat * psi).sum()):.2e}")
