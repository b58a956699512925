"""
Building spaces from cells
==========================

Spheres and disks as small finite spaces, glued stage by stage.
"""

import random

from cechspaces import FiniteClosureSpace, StageSpec, build_cw, disk_model, sphere_model
from cechspaces.universe import random_cw_script

for n in range(3):
    S = sphere_model(n)
    print(f"S{n}: {len(S)} points, topological={S.is_topological()}")

# two disk shapes over the same sphere
S0 = sphere_model(0)
cone, _ = disk_model(S0, "cone")
cylinder, _ = disk_model(S0, "cylinder")
print("cone:", cone.closure_map())
print("cylinder points:", cylinder.points)

# two 0-cells, then a 1-cell joining them
stages = [
    StageSpec(0, ({}, {})),
    StageSpec(1, ({"p": "e0.0/a", "q": "e0.1/a"},), "cone"),
]
cw = build_cw(FiniteClosureSpace([]), stages)
for k, space in enumerate(cw.spaces()):
    print(k, space.closure_map())

# random scripts with closed attaching maps
rng = random.Random(1)
sizes = []
for _ in range(200):
    base, script = random_cw_script(rng)
    top = build_cw(base, script).top
    assert top.is_topological()
    sizes.append(len(top))
print("largest build:", max(sizes), "points")
