"""Run the full property-check suite and print one line per check.

Covers orthonormality of every angular basis family, parity and helicity
eigen-relations, Bessel identities, plane-wave expansions, rotation
algebra, the frequency tables, boundary conditions, single-photon energy
normalization, field-energy equipartition, and the entanglement catalog.
Equivalent to `sphcavity verify`.
"""

import time

from sphcavity import run_suite

print(__doc__)
start = time.perf_counter()
reports = run_suite()
elapsed = time.perf_counter() - start

width = max(len(r.name) for r in reports)
for r in reports:
    status = "pass" if r.passed else "FAIL"
    print(f"  {r.name:{width}s}  {r.max_residual:10.3e} < {r.tolerance:7.1e}  {status}")

failed = [r for r in reports if not r.passed]
print(f"\n{len(reports) - len(failed)}/{len(reports)} checks passed "
      f"in {elapsed:.1f} s")
if failed:
    raise SystemExit(1)
