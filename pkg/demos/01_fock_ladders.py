"""
Parabosonic ladder operators on Fock states
===========================================

States are sparse sums of basis kets. Operators act on a single ket and
return a ``StateSum``; words of operators are applied right to left.
"""

from schwinger_dunkl import OscParams
from schwinger_dunkl.fock import CartesianState, CircularState, StateSum, apply_word, circular_to_cartesian

p = OscParams(0, 0.3, 0.7)  # only mu_x, mu_y matter at the Fock level

# A lowering operator picks up a mu-number: [3]_mu = 3 + 2 mu for odd 3
print(apply_word(["A-x"], CartesianState(3, 1), p))

# [A-x, A+x] = 1 + 2 mu_x Rx, checked on one state
s = CartesianState(2, 1)
lhs = apply_word(["A-x", "A+x"], s, p) - apply_word(["A+x", "A-x"], s, p)
rhs = StateSum.of(s) + apply_word(["Rx"], s, p).scale(2 * p.mu_x)
print("commutator matches:", lhs.isclose(rhs))

# Circular lowering mixes in reflection terms whenever n_L != n_R
print(apply_word(["A-L"], CircularState(2, 0), p))

# Circular kets expand on the Cartesian ones
print(circular_to_cartesian(CircularState(1, 1)))
