"""The recursion at the heart of the wave weights.

The weight A_l of wave j counts bounded integer vectors r with
r . d_nondiv = l.  Three independent routes produce it:

  1. brute-force enumeration of all r,
  2. counting solutions of the equivalent Diophantine system,
  3. a signed sum of *scalar partition counts* over the generators
     not divisible by j -- partitions built from smaller partitions.

Route 3 is what makes integer partitions self-contained: it can even be
fed by the wave engine itself instead of the DP oracle.
"""

from sylwaves import (
    GeneratorSet,
    build_system,
    count_vector_partitions,
    partition_count,
    weights_bruteforce,
    weights_recursive,
)

d = GeneratorSet([1, 2, 3])
j = 3

wb = weights_bruteforce(j, d)
wr = weights_recursive(j, d)
wsys = [count_vector_partitions(build_system(j, d, l)) for l in range(wb.l_max + 1)]

print(f"generators {list(d.d)}, wave j={j}, l_max={wb.l_max}")
print(f"  enumeration:        {list(wb.weights)}")
print(f"  Diophantine system: {wsys}")
print(f"  recursive formula:  {list(wr.weights)}")
assert list(wb.weights) == wsys == list(wr.weights)

# Fully recursive: scalar counts supplied by the wave engine itself.
w_self = weights_recursive(j, d, scalar_counter=lambda sub, s: partition_count(sub, s))
print(f"  wave-engine-fed:    {list(w_self.weights)}")
assert w_self.weights == wb.weights

sys_ = build_system(j, d, 2)
print()
print("Diophantine system for l=2 (free variables then slacks):")
for row, rhs in zip(sys_.matrix, sys_.rhs):
    print(f"  {list(row)} . R = {rhs}")
print(f"solutions: {count_vector_partitions(sys_)}  (= A_2)")
