"""
Generator matrices in the Cartesian and circular bases
=====================================================

Column j of each matrix is the image of basis vector j. We build the
level-N module three ways and compare spectra with the closed forms.
"""

import numpy as np

from schwinger_dunkl import BasisOrdering, OscParams, build_cartesian, build_circular, spectrum_closed_form
from schwinger_dunkl.repmat import b2_block_sizes, build_q
from schwinger_dunkl.verify import relation_residuals

p = OscParams(4, 0.3, 0.7)
sets = {
    "cartesian": build_cartesian(p),
    "circular-b1": build_circular(p, BasisOrdering.CIRCULAR_B1),
    "circular-b2": build_circular(p, BasisOrdering.CIRCULAR_B2),
}

for name, gs in sets.items():
    worst = max(relation_residuals(gs).values())
    print(f"{name:12s} worst relation residual {worst:.1e}")

# The Casimir is the scalar (H^2 - I)/4 = ((N + zeta + 1)^2 - 1)/4
print("Casimir diagonal:", np.diag(sets["cartesian"].Casimir).real)

# J2 in B2 is block upper-triangular, so its spectrum reads off the diagonal blocks
np.set_printoptions(precision=3, suppress=True, linewidth=120)
print(sets["circular-b2"].J2.real)
print("block sizes:", b2_block_sizes(p.n))
for op in ("J2", "J3"):
    vals = np.sort(np.linalg.eigvals(getattr(sets["circular-b2"], op)).real)
    print(op, vals, "closed form", spectrum_closed_form(p, op))
print("Q", np.sort(np.linalg.eigvals(build_q(p)).real), "closed form", spectrum_closed_form(p, "Q"))
