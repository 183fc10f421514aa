"""
Cartesian to circular transition matrix
=======================================

The Cartesian vectors are J3-eigenvectors; expanded in the circular basis
B1 their coefficients are Krawtchouk polynomials, independent of mu.
"""

import numpy as np

from schwinger_dunkl import BasisOrdering, OscParams, build_circular
from schwinger_dunkl.interbasis import build_transition, transition_coeff, transition_eigenvalues

N = 4
print("P_n(j) for N = 4 (rows n, columns j)")
print(np.array([[transition_coeff(n, j, N) for j in range(N + 1)] for n in range(N + 1)]))

for mu in [(0.0, 0.0), (0.3, 0.7), (1.5, -0.4)]:
    p = OscParams(N, *mu)
    tm = build_transition(p)
    J3 = build_circular(p, BasisOrdering.CIRCULAR_B1).J3
    res = np.linalg.norm(J3 @ tm.T - tm.T @ np.diag(transition_eigenvalues(p)))
    print(f"mu={mu}: residual {res:.1e}, cond(T) {tm.condition_number:.2f}")
