"""
Checking the gluing results on every small case
===============================================
"""

import random
import time

from cechspaces import Bounds, FiniteClosureSpace, StageSpec, pushout, verify_universal_property
from cechspaces.universe import random_span
from cechspaces.verify import check_theorem_main, check_theorem_prop1, closed_inclusion_spans, mutate_closure

start = time.perf_counter()
spans = list(closed_inclusion_spans(Bounds(2, 3, 3)))
reports = [check_theorem_prop1(s) for s in spans]
print(len(spans), "spans in", round(time.perf_counter() - start, 2), "s")
print("all consistent:", all(r.ok for r in reports))
closed = [r for r in reports if r.f_closed]
print(sum(r.pushout_topological for r in closed), "of", len(closed), "closed-f pushouts are topological")

# the gluing is the universal one among maps into small test spaces
rng = random.Random(0)
res = pushout(random_span(rng, 2, 3, 3))
print("universal:", verify_universal_property(res, cocone_bound=3))
point = res.Z.points[0]
others = [p for p in res.Z.points if p not in res.Z.closure({point})]
if others:
    print("mutated:", verify_universal_property(mutate_closure(res, point, others[0]), cocone_bound=3))

# a CW script whose second stage attaches along a non-closed map gets flagged
stages = [
    StageSpec(1, ({"p": 0, "q": 0},)),
    StageSpec(2, ({"p": "e0.0/a", "q": "e0.0/a", "m1": "e0.0/a", "m2": "e0.0/a"},)),
]
rep = check_theorem_main(FiniteClosureSpace([0]), stages)
for st in rep.stages:
    print(st)
