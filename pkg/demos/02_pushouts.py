"""
Gluing spaces along a common piece
==================================

Pushouts of closure spaces, and how they differ from the topological ones.
"""

from cechspaces import FiniteClosureSpace, Span, SpaceMap, pushout, top_pushout_oracle

# two indiscrete pairs glued along the point 1
A = FiniteClosureSpace([1])
X = FiniteClosureSpace.indiscrete([0, 1])
Y = FiniteClosureSpace.indiscrete([1, 2])
span = Span(A, SpaceMap(A, Y, {1: 1}), SpaceMap(A, X, {1: 1}))

res = pushout(span)
print(res.Z.closure_map())
print("j:", res.j.assignment, " g:", res.g.assignment)

# every glued point remembers where it came from
for (side, label), z in sorted(res.provenance.items(), key=str):
    print(f"  {side}:{label} -> {z}")

# 0 reaches 1 and 1 reaches 2, but 0 does not reach 2 in one step
print("topological:", res.Z.is_topological())

# the topological pushout is computed independently, and matches tau
top = top_pushout_oracle(span)
print(top.closure_map())
print(top == res.Z.topological_modification())
