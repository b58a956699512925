"""Colimits and finite limits of closure spaces.

Colimit carriers are the set-level colimits. Glued points are named by the
least original label in their class (see :func:`labels.canonical_names`);
every construction returns a provenance map from ``(tag, original label)``
to the new label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .core import FiniteClosureSpace, iter_bits
from .labels import canonical_names, label_key
from .maps import MapError, SpaceMap, is_closed_inclusion, subspace


class SpanError(ValueError):
    """Raised for malformed spans."""


class NotClosedInclusionError(SpanError):
    """Raised when a construction needs the i-leg to be a closed inclusion."""


@dataclass(frozen=True)
class Span:
    """The diagram ``X <-i- A -f-> Y``; both legs must be continuous."""

    A: FiniteClosureSpace
    f: SpaceMap
    i: SpaceMap

    def __post_init__(self):
        if self.f.domain != self.A or self.i.domain != self.A:
            raise SpanError("both legs must have domain A")
        if not self.f.is_continuous():
            raise SpanError("f is not continuous")
        if not self.i.is_continuous():
            raise SpanError("i is not continuous")

    @property
    def X(self) -> FiniteClosureSpace:
        return self.i.codomain

    @property
    def Y(self) -> FiniteClosureSpace:
        return self.f.codomain


@dataclass(frozen=True)
class PushoutResult:
    span: Span
    Z: FiniteClosureSpace
    j: SpaceMap
    g: SpaceMap
    provenance: dict = field(compare=False)

    def fibers(self) -> dict:
        """``{z: [(tag, label), ...]}``, the inverse of the provenance map."""
        out = {z: [] for z in self.Z.points}
        for src, z in self.provenance.items():
            out[z].append(src)
        for z in out:
            out[z].sort(key=lambda s: (s[0] != "Y", label_key(s[1])))
        return out


class Coproduct(NamedTuple):
    space: FiniteClosureSpace
    injections: list
    provenance: dict


class Coequalizer(NamedTuple):
    space: FiniteClosureSpace
    projection: SpaceMap


class Product(NamedTuple):
    space: FiniteClosureSpace
    projections: tuple


class Equalizer(NamedTuple):
    space: FiniteClosureSpace
    inclusion: SpaceMap


def coproduct(spaces: Sequence[FiniteClosureSpace]) -> Coproduct:
    """Disjoint union; the closure acts on each summand separately.

    Summand ``k`` has tag ``k``; a label already used by an earlier summand
    becomes ``"k:label"``.
    """
    members = [(k, p) for k, s in enumerate(spaces) for p in s.points]
    names = canonical_names([[m] for m in members], {k: k for k in range(len(spaces))})
    prov = dict(zip(members, names))
    closure = {
        prov[(k, p)]: [prov[(k, q)] for q in s.subset(s.singleton_masks[s.index(p)])]
        for k, s in enumerate(spaces)
        for p in s.points
    }
    total = FiniteClosureSpace(names, closure)
    injections = [
        SpaceMap(s, total, {p: prov[(k, p)] for p in s.points})
        for k, s in enumerate(spaces)
    ]
    return Coproduct(total, injections, prov)


def coequalizer(f: SpaceMap, g: SpaceMap) -> Coequalizer:
    """Quotient of the common codomain by ``f(x) ~ g(x)``.

    Classes are named by their least label; the closure is
    ``c(B) = p(c_Y(p^{-1} B))`` for the projection ``p``.
    """
    if f.domain != g.domain or f.codomain != g.codomain:
        raise MapError("coequalizer needs parallel maps")
    Y = f.codomain
    ds = DisjointSet(Y.points)
    for x in f.domain.points:
        ds.merge(f(x), g(x))
    classes = ds.subsets()
    rep = {}
    for cls in classes:
        name = min(cls, key=label_key)
        for y in cls:
            rep[y] = name
    names = sorted({rep[y] for y in Y.points}, key=label_key)
    proj_targets = [names.index(rep[y]) for y in Y.points]
    fiber = [0] * len(names)
    for k, t in enumerate(proj_targets):
        fiber[t] |= 1 << k
    masks = []
    for m in fiber:
        img = 0
        for k in iter_bits(Y.cl_mask(m)):
            img |= 1 << proj_targets[k]
        masks.append(img)
    Q = FiniteClosureSpace.from_masks(names, masks)
    return Coequalizer(Q, SpaceMap(Y, Q, rep))


def pushout(span: Span) -> PushoutResult:
    """Pushout of ``X <-i- A -f-> Y`` in closure spaces.

    The carrier is built as the coequalizer of the two legs into ``Y ⊔ X``;
    the closure is then evaluated directly as
    ``c_Z B = j c_Y j^{-1} B ∪ g c_X g^{-1} B``. Points are named with ``Y``
    taking precedence over ``X``.
    """
    X, Y = span.X, span.Y
    cop = coproduct([Y, X])
    inj_y, inj_x = cop.injections
    coeq = coequalizer(span.f.compose(inj_y), span.i.compose(inj_x))

    tag_of = {0: "Y", 1: "X"}
    back = {new: (tag_of[k], p) for (k, p), new in cop.provenance.items()}
    classes = {}
    for w in cop.space.points:
        classes.setdefault(coeq.projection(w), []).append(back[w])
    groups = list(classes.values())
    names = canonical_names(groups, {"Y": 0, "X": 1})
    prov = {src: name for grp, name in zip(groups, names) for src in grp}

    order = sorted(names, key=label_key)
    j = [order.index(prov[("Y", y)]) for y in Y.points]
    g = [order.index(prov[("X", x)]) for x in X.points]
    masks = []
    for t in range(len(order)):
        from_y = _pull_close_push(Y, j, t)
        from_x = _pull_close_push(X, g, t)
        masks.append(from_y | from_x)
    Z = FiniteClosureSpace.from_masks(order, masks)
    jm = SpaceMap(Y, Z, {y: prov[("Y", y)] for y in Y.points})
    gm = SpaceMap(X, Z, {x: prov[("X", x)] for x in X.points})
    return PushoutResult(span, Z, jm, gm, prov)


def _pull_close_push(space: FiniteClosureSpace, leg: list[int], target: int) -> int:
    pre = 0
    for k, t in enumerate(leg):
        if t == target:
            pre |= 1 << k
    out = 0
    for k in iter_bits(space.cl_mask(pre)):
        out |= 1 << leg[k]
    return out


def pushout_along_closed_inclusion(span: Span) -> PushoutResult:
    """Pushout when ``i`` is a closed inclusion.

    Takes ``Z = Y ⊔ (X ∖ A)`` with ``g = f`` on ``A`` and the identity off it,
    and ``c_Z B = c_Y(B ∩ Y) ∪ g(c_X(B ∩ (X ∖ A)))``. Point names agree with
    :func:`pushout`.
    """
    if not is_closed_inclusion(span.i):
        raise NotClosedInclusionError("i is not a closed inclusion")
    X, Y, A = span.X, span.Y, span.A
    in_a = {span.i(a): a for a in A.points}
    groups = []
    for y in Y.points:
        grp = [("Y", y)]
        grp += [("X", span.i(a)) for a in A.points if span.f(a) == y]
        groups.append(grp)
    rest = [x for x in X.points if x not in in_a]
    groups += [[("X", x)] for x in rest]
    names = canonical_names(groups, {"Y": 0, "X": 1})
    prov = {src: name for grp, name in zip(groups, names) for src in grp}

    closure = {}
    for y in Y.points:
        closure[prov[("Y", y)]] = [prov[("Y", q)] for q in Y.subset(Y.singleton_masks[Y.index(y)])]
    for x in rest:
        closure[prov[("X", x)]] = [
            prov[("X", q)] for q in X.subset(X.singleton_masks[X.index(x)])
        ]
    Z = FiniteClosureSpace(names, closure)
    jm = SpaceMap(Y, Z, {y: prov[("Y", y)] for y in Y.points})
    gm = SpaceMap(X, Z, {x: prov[("X", x)] for x in X.points})
    return PushoutResult(span, Z, jm, gm, prov)


def product(s1: FiniteClosureSpace, s2: FiniteClosureSpace) -> Product:
    """Binary product: ``(x', y') ∈ c{(x, y)}`` iff ``x' ∈ c{x}`` and ``y' ∈ c{y}``.

    Points are the pairs ``(x, y)``. Longer products are iterated binary ones.
    """
    closure = {
        (x, y): [
            (a, b)
            for a in s1.subset(s1.singleton_masks[s1.index(x)])
            for b in s2.subset(s2.singleton_masks[s2.index(y)])
        ]
        for x in s1.points
        for y in s2.points
    }
    P = FiniteClosureSpace(closure.keys(), closure)
    p1 = SpaceMap(P, s1, {xy: xy[0] for xy in P.points})
    p2 = SpaceMap(P, s2, {xy: xy[1] for xy in P.points})
    return Product(P, (p1, p2))


def equalizer(f: SpaceMap, g: SpaceMap) -> Equalizer:
    """Subspace of the domain on which ``f`` and ``g`` agree."""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise MapError("equalizer needs parallel maps")
    agree = [x for x in f.domain.points if f(x) == g(x)]
    E = subspace(f.domain, agree)
    return Equalizer(E, SpaceMap(E, f.domain, {x: x for x in agree}))
