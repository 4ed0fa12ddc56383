"""Two-qubit reductions of pure three-qubit states.

A kept pair is orbit-safe exactly when the traced-out qubit is maximally
mixed; in general the orbit optimum obeys best^2 = 1 + 2 l^2 with l the
lone qubit's Bloch length.  So whenever any local Bloch vector is nonzero,
two of the three parties can collude with a global unitary to violate the
steering bound.
"""

import numpy as np

import steerability as sb
from steerability import states

rng = np.random.default_rng(7)
random_psi = rng.standard_normal(8) + 1j * rng.standard_normal(8)
random_psi /= np.linalg.norm(random_psi)

for name, psi in (
    ("GHZ", sb.GHZ_STATE),
    ("W", sb.W_STATE),
    ("|000>", np.eye(8, dtype=complex)[0]),
    ("random pure", random_psi),
):
    print(f"\n{name}")
    verdicts = sb.reduced_pair_verdict(psi)
    for pair, lone in (("AB", "C"), ("BC", "A"), ("AC", "B")):
        ell = states.single_qubit_bloch_norm(psi, lone)
        v = verdicts[pair]
        print(f"  pair {pair}: l_{lone} = {ell:.6f}   best F3 on orbit = "
              f"{v.f3_global_max:.6f}   sqrt(1 + 2 l^2) = "
              f"{np.sqrt(1 + 2 * ell**2):.6f}   orbit-safe: {v.in_aus3}")

print("\nGHZ reductions are orbit-safe (every marginal is I/2); the W state's")
print("marginals all have l = 1/3, so every pair can be activated.")
