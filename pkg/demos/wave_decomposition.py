"""Walk through the wave decomposition of a partition count.

The number of ways to write s as a nonnegative combination of {1,2,3}
splits into a polynomial term plus one quasiperiodic wave per divisor.
The waves are individually non-integer rationals; their sum is the
exact integer count, matched here against brute-force DP.
"""

from sylwaves import GeneratorSet, count_partitions_dp, wave_decomposition

d = GeneratorSet([1, 2, 3])
print(f"generators: {list(d.d)}   (sum {d.s_m}, product {d.pi_m})")
print(f"{'s':>3}  {'count':>5}  waves")
for s in range(0, 13):
    dec = wave_decomposition(d, s)
    parts = "  ".join(f"W_{j}={v}" for j, v in dec.terms)
    assert dec.total == count_partitions_dp(d, s)
    print(f"{s:>3}  {dec.total:>5}  {parts}")

print()
print("Every row's waves sum exactly to the integer in the count column,")
print("and each count agrees with the dynamic-programming oracle.")
