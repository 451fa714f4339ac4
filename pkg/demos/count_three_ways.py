"""
Counting the same words three ways
==================================

A count you can trust is a count you got twice by unrelated methods.
Here the words themselves are enumerated and filtered, a finite
automaton counts them by transfer-matrix iteration, and the family
recurrence predicts both.  Then the marked-letter histogram is laid
against the triangle that claims to describe it.
"""

from restricted_words import (
    CaseSpec,
    composition_triangle,
    count_automaton,
    count_exhaustive,
    f0_prefix,
    fm_sequence,
    invert_power,
    iter_words,
    marked_histogram,
)

spec = CaseSpec(2, a=1)  # one cold letter, even runs; m=1 adds one free letter
m = 1

# the words of length 4, spelled out
print("valid words of length 4:")
for word in iter_words(spec, m, 4):
    print("  ", "".join(str(c) for c in word))

# three independent counts for each length
seq = fm_sequence(spec, m, 13)
print("\nlength  exhaustive  automaton  recurrence")
for length in range(13):
    ex = count_exhaustive(spec, m, length)
    au = count_automaton(spec, m, length)
    re = seq.at(length + 1)
    print(f"{length:>6}  {ex:>10}  {au:>9}  {re:>10}")
    assert ex == au == re

# histogram by number of marked letters vs the level-m triangle row
length = 8
hist = marked_histogram(spec, m, length)
row = composition_triangle(invert_power(f0_prefix(spec, length + 1), m - 1)).row(
    length + 1
)
print(f"\nmarked-letter histogram at length {length}:", hist)
print("matching triangle row:                ", list(row))

# the automaton keeps going long after enumeration is unaffordable
print("\ncount at length 300 has", len(str(count_automaton(spec, m, 300))), "digits")
