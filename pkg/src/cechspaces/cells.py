"""Finite models of spheres and disks, cell attachment, finite CW builds.

Spheres are iterated non-Hausdorff suspensions of two discrete points.
Disks come in two styles over a sphere ``S``:

``cone``
    ``S`` plus one open apex ``a`` with ``c{a} = {a} ∪ S``.
``cylinder``
    ``S × I`` with ``I`` the pseudo-interval ``{p, m, q}``, ``c{m} = I``,
    and boundary ``S × {p}``. Unlike the cone it lets every closed subset of
    the boundary be cut out as ``c(B) ∩ S`` with ``B`` off the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence

from .colimits import PushoutResult, Span, coproduct, product, pushout
from .core import FiniteClosureSpace
from .labels import Label, render
from .maps import SpaceMap, is_closed_inclusion

DEFAULT_SPHERE_BOUND = 3
STYLES = ("cone", "cylinder")


class AttachmentError(ValueError):
    pass


def pseudo_interval() -> FiniteClosureSpace:
    """``{p, m, q}`` with ``p``, ``q`` closed and ``c{m}`` everything."""
    return FiniteClosureSpace(["p", "m", "q"], {"m": ["p", "m", "q"]})


def sphere_model(n: int, bound: int = DEFAULT_SPHERE_BOUND) -> FiniteClosureSpace:
    """Finite topological stand-in for the ``n``-sphere.

    ``n = 0`` gives two discrete points ``p, q``; each further dimension adds
    two open apexes ``m{2k-1}, m{2k}`` whose closures contain the previous
    model. ``n = -1`` gives the empty space (boundary of a 0-cell).
    """
    if n < -1:
        raise ValueError(f"sphere dimension must be >= -1, got {n}")
    if n > bound:
        raise ValueError(f"sphere dimension {n} exceeds bound {bound}")
    if n == -1:
        return FiniteClosureSpace(())
    pts = ["p", "q"]
    closure = {}
    for k in range(1, n + 1):
        below = list(pts)
        for apex in (f"m{2 * k - 1}", f"m{2 * k}"):
            closure[apex] = below + [apex]
            pts.append(apex)
    return FiniteClosureSpace(pts, closure)


def disk_model(sphere: FiniteClosureSpace, style: str = "cone") -> tuple[FiniteClosureSpace, SpaceMap]:
    """A disk with the given sphere as boundary, and the boundary inclusion.

    Over the empty sphere both styles give a single point ``a``.
    """
    if style not in STYLES:
        raise ValueError(f"unknown disk style {style!r}")
    if style == "cone" or len(sphere) == 0:
        apex = "a"
        while apex in sphere:
            apex += "'"
        pts = list(sphere.points) + [apex]
        closure = {p: sphere.singleton_closure(p) for p in sphere.points}
        closure[apex] = pts
        disk = FiniteClosureSpace(pts, closure)
        return disk, SpaceMap(sphere, disk, {p: p for p in sphere.points})
    disk = product(sphere, pseudo_interval()).space
    return disk, SpaceMap(sphere, disk, {p: (p, "p") for p in sphere.points})


@dataclass(frozen=True)
class Cell:
    """One cell: ``boundary: sphere -> disk`` glued along ``attaching: sphere -> base``."""

    sphere: FiniteClosureSpace
    disk: FiniteClosureSpace
    boundary: SpaceMap
    attaching: SpaceMap
    dim: int = 0  # metadata only


@dataclass(frozen=True)
class CellAttachment:
    base: FiniteClosureSpace
    cells: tuple = ()

    def __post_init__(self):
        for k, cell in enumerate(self.cells):
            if cell.boundary.domain != cell.sphere or cell.boundary.codomain != cell.disk:
                raise AttachmentError(f"cell {k}: boundary map does not go sphere -> disk")
            if not is_closed_inclusion(cell.boundary):
                raise AttachmentError(f"cell {k}: boundary is not a closed inclusion")
            if cell.attaching.domain != cell.sphere or cell.attaching.codomain != self.base:
                raise AttachmentError(f"cell {k}: attaching map does not go sphere -> base")
            if not cell.attaching.is_continuous():
                raise AttachmentError(f"cell {k}: attaching map is not continuous")

    def attaching_span(self) -> Span:
        """``∐ disks <-i- ∐ spheres -phi-> base``."""
        spheres = coproduct([c.sphere for c in self.cells])
        disks = coproduct([c.disk for c in self.cells])
        i, phi = {}, {}
        for k, c in enumerate(self.cells):
            for p in c.sphere.points:
                s = spheres.provenance[(k, p)]
                i[s] = disks.provenance[(k, c.boundary(p))]
                phi[s] = c.attaching(p)
        return Span(
            spheres.space,
            SpaceMap(spheres.space, self.base, phi),
            SpaceMap(spheres.space, disks.space, i),
        )


class Attached(NamedTuple):
    space: FiniteClosureSpace
    j: SpaceMap
    Phi: SpaceMap
    pushout: PushoutResult


def attach_cells(att: CellAttachment) -> Attached:
    """Glue all cells of ``att`` to its base in one pushout.

    Returns the new space, the inclusion ``j`` of the base and the
    characteristic map ``Phi`` from the disjoint union of disks. Both the
    boundary inclusion and ``j`` are checked to be closed inclusions.
    """
    span = att.attaching_span()
    if not is_closed_inclusion(span.i):
        raise AttachmentError("coproduct of boundary inclusions is not a closed inclusion")
    result = pushout(span)
    if not is_closed_inclusion(result.j):
        raise AttachmentError("base does not include as a closed subspace")
    return Attached(result.Z, result.j, result.g, result)


@dataclass(frozen=True)
class StageSpec:
    """Cells of one dimension attached in one step.

    ``cells`` holds one attaching assignment per cell, from labels of
    ``sphere_model(dim - 1)`` to labels of the space built so far.
    """

    dim: int
    cells: tuple = ()
    style: str = "cone"


@dataclass(frozen=True)
class CWStage:
    space: FiniteClosureSpace
    attachment: CellAttachment | None
    inclusion: SpaceMap | None  # previous stage -> this stage


@dataclass(frozen=True)
class CWComplex:
    base: FiniteClosureSpace
    stages: tuple = field(default=())

    @property
    def top(self) -> FiniteClosureSpace:
        return self.stages[-1].space if self.stages else self.base

    def spaces(self) -> list:
        return [self.base] + [s.space for s in self.stages]

    def inclusions_into_top(self) -> list:
        """Composite inclusions ``X^k -> top`` for every stage, base first."""
        out = [SpaceMap.identity(self.top)]
        for st in reversed(self.stages):
            out.append(st.inclusion.compose(out[-1]))
        return out[::-1]


def make_cell(
    dim: int,
    attaching: Mapping[Label, Label],
    base: FiniteClosureSpace,
    style: str = "cone",
    prefix: str | None = None,
) -> Cell:
    """Build a ``dim``-cell whose disk points (other than the boundary) carry ``prefix``."""
    sphere = sphere_model(dim - 1)
    disk, boundary = disk_model(sphere, style)
    if prefix is not None:
        rename = {p: f"{prefix}/{render(p)}" for p in disk.points}
        disk = disk.relabel(rename)
        boundary = SpaceMap(sphere, disk, {p: rename[boundary(p)] for p in sphere.points})
    return Cell(sphere, disk, boundary, SpaceMap(sphere, base, dict(attaching)), dim)


def build_cw(base: FiniteClosureSpace, stages: Sequence[StageSpec]) -> CWComplex:
    """Attach the stages in order, checking every stage inclusion is closed."""
    built = []
    current = base
    for n, spec in enumerate(stages):
        cells = tuple(
            make_cell(spec.dim, assignment, current, spec.style, prefix=f"e{n}.{k}")
            for k, assignment in enumerate(spec.cells)
        )
        att = CellAttachment(current, cells)
        res = attach_cells(att)
        built.append(CWStage(res.space, att, res.j))
        current = res.space
    cw = CWComplex(base, tuple(built))
    for k, incl in enumerate(cw.inclusions_into_top()):
        if not is_closed_inclusion(incl):
            raise AttachmentError(f"stage {k - 1} does not include as a closed subspace")
    return cw
