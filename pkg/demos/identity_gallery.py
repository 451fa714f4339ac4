"""
A gallery of sequence identities, verified by machine
=====================================================

Binomial-sum expressions for Fibonacci, Pell, Jacobsthal, Mersenne,
Tribonacci and Padovan numbers all fall out of the word counts.  The
registry checks every one of them against independently computed
classics; here a few get shown off with their actual numbers.
"""

from restricted_words import IDENTITY_NAMES, binom, check_identity, classic

# odd-indexed Fibonacci numbers as a single binomial row sum
print("F(2n-1) = sum_k C(n+k-2, n-k):")
for n in range(1, 8):
    terms = [binom(n + k - 2, n - k) for k in range(1, n + 1)]
    print(f"  n={n}: {' + '.join(str(t) for t in terms)} = {sum(terms)}"
          f"  (F_{2 * n - 1} = {classic('fibonacci', 2 * n - 1)})")

# Padovan numbers count compositions into parts 2 and 3
def compositions_23(n):
    if n == 0:
        return 1
    total = 0
    if n >= 2:
        total += compositions_23(n - 2)
    if n >= 3:
        total += compositions_23(n - 3)
    return total


print("\ncompositions of n into parts 2 and 3:")
for n in range(2, 10):
    print(f"  n={n}: {compositions_23(n)} ways (padovan({n + 3}) = {classic('padovan', n + 3)})")

# the registry, end to end
print("\nall registered identities at max_n=24:")
for name in IDENTITY_NAMES:
    print(" ", check_identity(name, max_n=24).describe())
