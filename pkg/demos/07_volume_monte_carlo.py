"""How big is the orbit-safe set?

Hilbert-Schmidt-measure sampling of two-qubit states; the membership test
is simply purity <= 1/2.  Equivalent to:

    steerability sample --samples 100000 --seed 3
"""

import steerability as sb

print(f"{'samples':>9} {'fraction':>10} {'stderr':>10}")
for samples in (1000, 10_000, 100_000, 400_000):
    fraction, stderr = sb.aus3_volume_estimate(samples, sb.SeededGenerator(3))
    print(f"{samples:9d} {fraction:10.5f} {stderr:10.5f}")

print("\nsame seed, same answer (pure function of seed and stream):")
again, _ = sb.aus3_volume_estimate(100_000, sb.SeededGenerator(3))
print(f"  rerun fraction = {again:.5f}")

print("\nindependent streams give independent draws:")
for stream in range(4):
    fraction, stderr = sb.aus3_volume_estimate(50_000, sb.SeededGenerator(3, stream))
    print(f"  stream {stream}: fraction = {fraction:.5f} +/- {stderr:.5f}")
