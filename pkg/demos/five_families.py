"""
Five families of restricted words, one screen each
==================================================

Every family restricts words over an alphabet with some "cold" letters
subject to a structural rule, plus m extra letters free of any rule.
f_m(n) counts the valid words of length n - 1; watching the first
terms for small m turns up a surprising number of familiar sequences.
"""

from restricted_words import CaseSpec, fm_sequence

N = 10


def show(title, spec, levels):
    print(title)
    for m in levels:
        print(f"  m={m}:", list(fm_sequence(spec, m, N)))
    print()


# family 1: no two equal adjacent cold letters
show("case 1 (a=2): no immediate repeats", CaseSpec(1, a=2), (0, 1, 2))

# family 2: maximal runs of cold letters must have even length;
# a=1 gives Fibonacci at m=1 and Pell at m=2, a=2 gives Jacobsthal
show("case 2 (a=1): even cold runs", CaseSpec(2, a=1), (0, 1, 2))
show("case 2 (a=2): even cold runs", CaseSpec(2, a=2), (0, 1, 2))

# family 3: letter 0 may not be followed by any of the b letters 1..b;
# (3,2) counts 2^n - 1 at m=0
show("case 3 (a=3, b=2): forbidden successors", CaseSpec(3, a=3, b=2), (0, 1))

# family 4: the 0/1 letters only appear as blocks "one 1, then zeros";
# m=1 doubles, m=2 walks the odd-indexed Fibonacci numbers
show("case 4: single-1 blocks", CaseSpec(4), (0, 1, 2))

# family 5: 0-runs of even length, 1-runs of length divisible by 3;
# m=0 is the Padovan sequence shifted, m=1 is Tribonacci
show("case 5: run lengths 2|.. and 3|..", CaseSpec(5), (0, 1))
