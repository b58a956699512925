"""
Gluing an interval onto an indiscrete pair
==========================================

Both ends of a three-point interval are sent to one point of an indiscrete
pair. The glued space is not topological, and a small search finds the same
shape again.
"""

from cechspaces import (
    Bounds,
    FiniteClosureSpace,
    Span,
    SpaceMap,
    inclusion,
    mine_counterexamples,
    pseudo_interval,
    pushout,
    top_pushout_oracle,
)
from cechspaces.verify import check_theorem_prop1

I = pseudo_interval()
print(I.closure_map())

ends = inclusion(I, ["p", "q"])
target = FiniteClosureSpace.indiscrete([0, 1])
span = Span(ends.domain, SpaceMap.constant(ends.domain, target, 0), ends)

Z = pushout(span).Z
once = Z.closure({"m"})
print("c{m}  =", sorted(once, key=str))
print("cc{m} =", sorted(Z.closure(once), key=str))
print("Top pushout:", top_pushout_oracle(span).closure_map())

# the constant map onto 0 is not closed: {0} is not closed in the target
report = check_theorem_prop1(span)
for key, value in report.narrative().items():
    print(f"  {key}: {value}")

# search all small spans; each certificate replays on its own
certs = mine_counterexamples(Bounds(2, 3, 2), budget=2000)
print(len(certs), "certificates")
print(certs[0].to_json()[:200], "...")
print(all(c.replays() for c in certs))
