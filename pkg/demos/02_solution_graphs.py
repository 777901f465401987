"""
Conjugation moves and bounded solution graphs
=============================================

Fix two components of a solution of s(x^2+y^2+z^2) - s^3 - 2xyz = 0 and the
third satisfies a quadratic; swapping it for the other root is a "move".
Moves connect solutions into graphs.
"""

from cayleycubic import (
    Triple,
    conjugate_component,
    family_triple,
    neighbors,
    reduction_trace,
    solution_graph,
)

# A solution straight from a chain: indices {2, 6, 4} with 6 = 2 + 4.
t = family_triple(3, 6, 2, 4)
print("triple:", t.components, "value:", t.value)

# Each component has a conjugate; integral positive ones give new solutions.
for i in range(3):
    print(f"  conjugate of component {i}:", conjugate_component(t, i))
print("neighbors:", [n.components for n in neighbors(t)])

# Repeatedly conjugating the maximum walks the solution down to a terminal
# (s, p, p) form -- the discrete analogue of a descent argument.
print("descent:")
for step in reduction_trace(Triple(3, 21, 4053, 291)):
    print("   ", step.components)

# The same moves, explored in both directions under a component bound,
# give a finite graph.  Frontier vertices have at least one integral move
# that leaves the bound.
g = solution_graph(Triple(3, 3, 6, 6), 300)
print("graph vertices:", g.vertices)
print("graph edges (i, j, component):", g.edges)
print("frontier:", [g.vertices[i] for i in g.frontier])

# Some solutions have no moves at all: every conjugate is fractional.
lone = Triple(24, 26, 51, 74)
print("isolated triple:", lone.components,
      [str(conjugate_component(lone, i)) for i in range(3)])
print("its graph:", solution_graph(lone, 10**6).vertices)

# Export formats for downstream tools.
print(g.to_json())
print(g.to_dot())
