"""
Markov triples and the continuant calculus
==========================================

The Markov equation x^2 + y^2 + z^2 = 3xyz has the same
replace-one-component move structure as the cubic surface, but its
solutions are indexed by continued-fraction words rather than chain
indices.  Continuants make that bookkeeping computable.
"""

from cayleycubic import (
    continuant,
    continuant_drop_last,
    continuant_interior,
    continuant_power_sequence,
    markov_neighbor,
    markov_tree,
    markov_value,
    sequence_overlap_search,
)

# The tree of Markov triples grows from (1,1,1) by the move
# x -> 3yz - x applied to one component at a time.
for depth in range(4):
    print("depth", depth, ":", markov_tree(depth))

t = (1, 2, 5)
print("moves from (1,2,5):", [markov_neighbor(t, i) for i in range(3)])
print("moves are involutions:",
      all(markov_neighbor(markov_neighbor(t, i), i) == t for i in range(3)))
print("all depth-6 triples solve the equation:",
      all(markov_value(*v) == 0 for v in markov_tree(6)))

# Continuants: K(a_1..a_k) is the numerator of the continued fraction
# [a_1; a_2, ..., a_k].  All-ones words give Fibonacci numbers.
print("K of all-ones words:", [continuant((1,) * n) for n in range(1, 9)])
print("K(2,1,1) =", continuant((2, 1, 1)))
print("K'(2,1,1) =", continuant_drop_last((2, 1, 1)), "(last entry dropped)")
print("K''(2,1,1,3) =", continuant_interior((2, 1, 1, 3)), "(both ends dropped)")

# Dropping the last entry of powers of a block yields a linear recurrence:
# the sequence K'(b), K'(ab), K'(aab), ... satisfies x_{k+1} = q x_k - x_{k-1}
# with q = K'(aa)/K'(a) -- the same recurrence shape the cubic chains use.
print("K'(a^k b) for a=(1,1), b=(2):",
      continuant_power_sequence((1, 1), (2,), 6))
print("K'(a^k) for a=(2,2):",
      continuant_power_sequence((2, 2), (), 6))

# Same recurrence shape, but do the two worlds ever produce the same
# sequence?  A bounded search over blocks and seeds finds no overlap
# with s >= 2.
report = sequence_overlap_search()
print("overlap search bounds:", report.bounds)
print("matches with s >= 2:", report.matches_s_ge_2)
