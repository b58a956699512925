"""Brute-force reference implementations used to compute expected values.

Everything here works on plain frozensets read from ``singleton_closure``
and enumerates subsets directly; nothing calls the library's closure,
closedness or continuity code.
"""

from itertools import chain, combinations


def subsets(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


def closure(space, A):
    out = set()
    for p in A:
        out |= space.singleton_closure(p)
    return frozenset(out)


def closed_sets(space):
    return [A for A in subsets(space.points) if closure(space, A) == A]


def is_topological(space):
    return all(closure(space, closure(space, A)) == closure(space, A) for A in subsets(space.points))


def tau(space, A):
    """Intersection of all closed sets containing ``A``."""
    hull = frozenset(space.points)
    for C in closed_sets(space):
        if A <= C:
            hull &= C
    return hull


def image(f, A):
    return frozenset(f(p) for p in A)


def is_continuous(f):
    return all(
        image(f, closure(f.domain, A)) <= closure(f.codomain, image(f, A))
        for A in subsets(f.domain.points)
    )


def is_closed_map(f):
    return all(
        closure(f.codomain, image(f, C)) == image(f, C) for C in closed_sets(f.domain)
    )


def pushout_closure(result, B):
    """``j c_Y j^-1 B ∪ g c_X g^-1 B`` from frozensets."""
    span, j, g = result.span, result.j, result.g
    pre_y = frozenset(y for y in span.Y.points if j(y) in B)
    pre_x = frozenset(x for x in span.X.points if g(x) in B)
    return image(j, closure(span.Y, pre_y)) | image(g, closure(span.X, pre_x))


def isomorphic_via(space1, space2, mapping):
    """Whether the bijection ``mapping`` carries closures of ``space1`` onto ``space2``."""
    if sorted(map(repr, mapping.values())) != sorted(map(repr, space2.points)):
        return False
    return all(
        frozenset(mapping[q] for q in space1.singleton_closure(p))
        == space2.singleton_closure(mapping[p])
        for p in space1.points
    )
