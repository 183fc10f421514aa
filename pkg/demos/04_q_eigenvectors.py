"""
Eigenvectors of Q and of J2
===========================

Q-eigenvectors come from a triangular recurrence per sector k. Pairs of
them combine into J2-eigenvectors. The recurrence coefficients also have
closed forms through para-Krawtchouk polynomials and Heun polynomials.
"""

import numpy as np

from schwinger_dunkl import OscParams
from schwinger_dunkl.qdiag import (
    assemble_q_eigvecs,
    closed_form_even,
    heun_coeffs_even,
    j2_eigenbasis,
    link_coeffs,
    solve_recurrence_even,
)
from schwinger_dunkl.repmat import build_circular, build_q

p = OscParams(4, 0.3, 0.7)
Q = build_q(p)
table = assemble_q_eigvecs(p)
for key in table.keys():
    v, lam = table.vectors[key], table.eigenvalues[key]
    print(key, f"nu={lam:+.2f}", f"residual {np.linalg.norm(Q @ v - lam * v):.1e}")

# Three routes to the same coefficients in sector k = 2
k = 2
print("recurrence ", solve_recurrence_even(k, p, n_max=2 * k).a_seq)
print("closed form", np.array([closed_form_even(k, p, n) for n in range(2 * k + 1)]))
print("Heun       ", heun_coeffs_even(k, p))

# The link coefficient between the two Q-eigenvectors has modulus one
print("omega_1 =", link_coeffs(1, p).c, "|omega_1| =", abs(link_coeffs(1, p).c))

E, lam = j2_eigenbasis(p)
J2 = build_circular(p).J2
print("J2 eigenvalues", lam)
print("J2 residual", np.linalg.norm(J2 @ E - E * lam))
