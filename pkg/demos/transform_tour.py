"""
A tour of the invert transform and composition triangles
========================================================

Start from any integer sequence f(1), f(2), ... and treat f(i) as the
weight of a composition part of size i.  Summing the weight products
over all compositions of n gives a new sequence; splitting by the
number of parts gives a triangle.
"""

from restricted_words import (
    Sequence,
    composition_triangle,
    invert,
    invert_power,
    lift_triangle,
    row_sums,
)

# the all-ones weights: every composition counts once, so the transform
# counts compositions of n, which double each time
f = Sequence([1, 1, 1, 1, 1, 1, 1])
print("weights:   ", list(f))
print("transform: ", list(invert(f)))

# aerated weights (only even part sizes allowed) produce Fibonacci
aerated = Sequence([1, 0, 1, 0, 1, 0, 1])
print("\neven parts only:", list(invert(aerated)))

# the m-th iterate of the transform in one step
for m in range(4):
    print(f"iterate m={m}:", list(invert_power(aerated, m)))

# the triangle underneath: entry (n, k) sums weights over compositions
# of n into exactly k parts; row sums recover the transform
t = composition_triangle(aerated)
print("\ntriangle of the aerated weights:")
for row in t.rows:
    print("  ", list(row))
print("row sums:", list(row_sums(t)))

# lifting the k-parts triangle to level m without recomputing it from
# scratch: same thing as building the triangle over the (m-1)-th
# transform of the weights
lifted = lift_triangle(t, 2)
direct = composition_triangle(invert_power(aerated, 1))
print("\nlift to level 2 equals the direct build:", lifted == direct)
