"""
Finite closure spaces
=====================

A closure space on a finite set is fixed by the closure of each point.
"""

from cechspaces import FiniteClosureSpace, validate

# three points on a cycle: each point sees its neighbours
Z3 = FiniteClosureSpace([0, 1, 2], {0: [0, 1], 1: [0, 1, 2], 2: [1, 2]})
print(Z3.closure_map())

# closures of larger sets are unions of point closures
print(sorted(Z3.closure({0, 2})))

# applying the closure twice can grow the set further
once = Z3.closure({0})
twice = Z3.closure(once)
print(sorted(once), sorted(twice))
print("topological:", Z3.is_topological())

# iterating to a fixed point gives the nearest topology
T = Z3.topological_modification()
print(T.closure_map(), T.is_topological())

# closed sets are the fixed points of the closure
print([sorted(s) for s in Z3.closed_sets()])

# a closure missing its own point breaks extensivity
bad = FiniteClosureSpace([0, 1], {0: [1]}, check=False)
for v in validate(bad):
    print(v)
