"""Partitions, Young tableaux and the hook-length count.

Enumerates partitions in reverse-lexicographic order, counts standard
tableaux two independent ways, and checks the dimension identity
sum of (count)^2 = n! that makes these counts the irreducible dimensions
of the symmetric group.
"""

from math import factorial

from symwiener.partitions import (
    conjugate,
    count_standard_tableaux_bruteforce,
    enumerate_partitions,
    hook_dimension,
    hook_lengths,
    semistandard_tableaux,
)

print("partitions of 5, reverse-lexicographic:")
for lam in enumerate_partitions(5):
    print("  ", lam, " transpose:", conjugate(lam))

lam = (3, 2)
print(f"\nhook lengths of {lam}: {hook_lengths(lam)}")
print(f"hook count {hook_dimension(lam)} vs exhaustive fillings "
      f"{count_standard_tableaux_bruteforce(lam)}")

for n in range(1, 8):
    total = sum(hook_dimension(lam) ** 2 for lam in enumerate_partitions(n))
    print(f"n = {n}: sum of squared counts = {total} = {n}! -> {total == factorial(n)}")

print("\nsemistandard fillings of (2,1) with letters {1,2}:")
for tab in semistandard_tableaux((2, 1), 2):
    print("  ", tab.rows)
