import random

import pytest

import oracles
from cechspaces import (
    CellAttachment,
    FiniteClosureSpace,
    StageSpec,
    attach_cells,
    build_cw,
    closed_inclusion_conditions,
    condition_b,
    disk_model,
    pseudo_interval,
    sphere_model,
)
from cechspaces.cells import AttachmentError, Cell, make_cell
from cechspaces.maps import SpaceMap, is_closed_inclusion
from cechspaces.universe import random_cw_script


def test_sphere_zero_is_two_points():
    assert sphere_model(0) == FiniteClosureSpace.discrete(["p", "q"])


def test_sphere_one():
    S1 = sphere_model(1)
    assert set(S1.points) == {"p", "q", "m1", "m2"}
    assert S1.closure({"m1"}) == {"p", "q", "m1"}
    assert S1.closure({"m2"}) == {"p", "q", "m2"}
    assert S1.is_topological()


@pytest.mark.parametrize("n", range(-1, 4))
def test_spheres_are_topological(n):
    S = sphere_model(n)
    assert S.is_topological()
    assert len(S) == (0 if n < 0 else 2 * (n + 1))


def test_sphere_bound():
    with pytest.raises(ValueError):
        sphere_model(4)
    assert len(sphere_model(4, bound=4)) == 10


def test_cone_over_two_points_is_pseudo_interval():
    disk, boundary = disk_model(sphere_model(0), "cone")
    assert disk.closure({"a"}) == {"p", "q", "a"}
    assert oracles.isomorphic_via(pseudo_interval(), disk, {"p": "p", "q": "q", "m": "a"})
    assert boundary.assignment == {"p": "p", "q": "q"}


def test_cylinder_over_two_points():
    S0 = sphere_model(0)
    disk, boundary = disk_model(S0, "cylinder")
    assert len(disk) == 6
    A = boundary.image(S0.points)
    outside = [x for x in disk.points if x not in A]
    reachable = {oracles.closure(disk, B) & A for B in oracles.subsets(outside)}
    closed_in_A = {C for C in oracles.subsets(A) if oracles.closure(disk, C) & A == C}
    assert len(closed_in_A) == 4
    assert closed_in_A <= reachable
    assert condition_b(disk, A)


@pytest.mark.parametrize("n", range(-1, 3))
@pytest.mark.parametrize("style", ["cone", "cylinder"])
def test_boundary_inclusions_are_closed(n, style):
    S = sphere_model(n)
    disk, boundary = disk_model(S, style)
    assert disk.is_topological()
    assert closed_inclusion_conditions(disk, boundary.image(S.points)) == (True, True, True)
    assert is_closed_inclusion(boundary)


@pytest.mark.parametrize("n", range(0, 3))
def test_cylinders_satisfy_condition_b_and_cones_do_not(n):
    S = sphere_model(n)
    cyl, cb = disk_model(S, "cylinder")
    cone, kb = disk_model(S, "cone")
    assert condition_b(cyl, cb.image(S.points))
    # the cone's only point off the boundary reaches just ∅ and the whole sphere
    assert not condition_b(cone, kb.image(S.points))


def test_unknown_style():
    with pytest.raises(ValueError):
        disk_model(sphere_model(0), "ball")


def _one_cell(base, value, dim=1, style="cone"):
    sphere = sphere_model(dim - 1)
    return make_cell(dim, {p: value for p in sphere.points}, base, style)


def test_attach_one_cell_to_point():
    base = FiniteClosureSpace(["•"])
    res = attach_cells(CellAttachment(base, (_one_cell(base, "•"),)))
    assert res.space.closure_map() == {"a": ["a", "•"], "•": ["•"]}
    assert res.space.is_topological()
    assert res.j.assignment == {"•": "•"}
    assert res.Phi.assignment == {"p": "•", "q": "•", "a": "a"}


def test_attach_to_indiscrete_pair_is_not_topological():
    base = FiniteClosureSpace.indiscrete([0, 1])
    res = attach_cells(CellAttachment(base, (_one_cell(base, 0),)))
    Z = res.space
    assert oracles.closure(Z, {"a"}) == {0, "a"}
    assert Z.closure({"a"}) == {0, "a"}
    assert Z.closure(Z.closure({"a"})) == {0, 1, "a"}
    assert not Z.is_topological()


def test_attach_no_cells():
    base = FiniteClosureSpace.indiscrete([0, 1])
    res = attach_cells(CellAttachment(base, ()))
    assert res.space == base
    assert res.j == SpaceMap.identity(base)


def test_attachment_rejects_discontinuous_attaching_map():
    base = FiniteClosureSpace(["a", "b"], {"a": ["a"], "b": ["a", "b"]})
    S1 = sphere_model(1)
    bad = {"p": "b", "q": "b", "m1": "a", "m2": "a"}
    with pytest.raises(AttachmentError):
        CellAttachment(base, (make_cell(2, bad, base),))


def test_attachment_rejects_non_closed_boundary():
    S = sphere_model(0)
    disk = FiniteClosureSpace(["p", "q", "a"], {"p": ["p", "a"]})
    base = FiniteClosureSpace(["*"])
    cell = Cell(S, disk, SpaceMap(S, disk, {"p": "p", "q": "q"}), SpaceMap.constant(S, base, "*"), 1)
    with pytest.raises(AttachmentError):
        CellAttachment(base, (cell,))


def test_build_cw_with_no_stages():
    base = FiniteClosureSpace.indiscrete([0, 1])
    cw = build_cw(base, [])
    assert cw.top == base and cw.stages == ()


def test_build_cw_interval():
    empty = FiniteClosureSpace([])
    stages = [
        StageSpec(0, ({}, {})),
        StageSpec(1, ({"p": "e0.0/a", "q": "e0.1/a"},), "cone"),
    ]
    cw = build_cw(empty, stages)
    assert cw.stages[0].space == FiniteClosureSpace.discrete(["e0.0/a", "e0.1/a"])
    mapping = {"p": "e0.0/a", "q": "e0.1/a", "m": "e1.0/a"}
    assert oracles.isomorphic_via(pseudo_interval(), cw.top, mapping)
    for incl in cw.inclusions_into_top():
        assert is_closed_inclusion(incl)
    for st in cw.stages:
        assert closed_inclusion_conditions(st.space, st.inclusion.image(st.inclusion.domain.points)) == (True,) * 3


@pytest.mark.parametrize("seed", range(150))
def test_random_builds_have_closed_stage_inclusions(seed):
    rng = random.Random(seed)
    base, stages = random_cw_script(rng, closed_attaching=bool(seed % 2))
    cw = build_cw(base, stages)
    for st in cw.stages:
        span = st.attachment.attaching_span()
        assert is_closed_inclusion(span.i)
        assert is_closed_inclusion(st.inclusion)
    for incl in cw.inclusions_into_top():
        assert is_closed_inclusion(incl)
        X = incl.codomain
        if len(X) <= 10:  # the closed-map clause enumerates every closed set
            assert closed_inclusion_conditions(X, incl.image(incl.domain.points)) == (True,) * 3
