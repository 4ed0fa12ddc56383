"""Witnessing activation: an operator that is nonnegative on every
orbit-safe state but negative on a state that a global unitary can activate.
"""

import numpy as np

import steerability as sb

target = sb.gisin(0.8, 0.3)
print("target: gisin(0.8, 0.3) -- satisfies the inequality as given,")
print(f"        but purity = {sb.decide_aus3(target).purity:.4f} > 1/2")

w = sb.activation_witness(target)
expectation = np.trace(w.matrix @ target).real
print(f"\nTr(W target) = {expectation:.12f}  (= 1 - orbit optimum, negative)")

print("\nexpectations on sampled orbit-safe states (must all be >= 0):")
count, lowest = 0, np.inf
stream = 0
while count < 2000:
    sigma = sb.random_state(sb.SeededGenerator(99, stream))
    stream += 1
    if np.trace(sigma @ sigma).real > 0.5:
        continue
    lowest = min(lowest, np.trace(w.matrix @ sigma).real)
    count += 1
print(f"  checked {count} states, smallest expectation = {lowest:.6f}")

print("\na state that is safe on its whole orbit admits no such witness:")
try:
    sb.activation_witness(sb.werner(0.5))
except sb.NotActivatable as exc:
    print(f"  NotActivatable: {exc}")

print("\nthe witness is the canonical-frame steering witness pulled back")
print("through the activating unitary; its expectation on the target equals")
print("1 - F3(canonical) by the cyclic property of the trace:")
U = w.unitary
inner = sb.steering_witness(w.setting)
pushed = U @ target @ U.conj().T
print(f"  Tr((I - S) U rho U^dag) = {np.trace(inner @ pushed).real:.12f}")
print(f"  Tr(W rho)               = {expectation:.12f}")
