"""Pushouts of topological spaces computed in Top, from closed sets.

This module is a cross-check on ``tau(pushout(...))`` and deliberately does
not use the closure machinery of :mod:`cechspaces.core`,
:mod:`cechspaces.maps` or :mod:`cechspaces.colimits`. It reads only point
lists, stored singleton closures and map assignments, glues carriers with
networkx, and finds closed sets by direct enumeration.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from .core import FiniteClosureSpace
from .labels import canonical_names, label_key

MAX_POINTS = 16


class NotTopologicalError(ValueError):
    pass


def _is_closed(cells: dict, candidate: frozenset) -> bool:
    return all(cells[p] <= candidate for p in candidate)


def _idempotent(cells: dict) -> bool:
    return all(cells[q] <= cells[p] for p in cells for q in cells[p])


def top_pushout_oracle(span) -> FiniteClosureSpace:
    """The pushout in Top of a span of topological spaces.

    A subset ``C`` of the glued carrier is closed exactly when its preimages
    in ``X`` and in ``Y`` are closed; the closure of a point is the
    intersection of the closed sets containing it. Points are named as in
    :func:`cechspaces.colimits.pushout`.
    """
    f, i = span.f, span.i
    X, Y, A = i.codomain, f.codomain, f.domain
    cells_x = {p: frozenset(X.singleton_closure(p)) for p in X.points}
    cells_y = {p: frozenset(Y.singleton_closure(p)) for p in Y.points}
    cells_a = {p: frozenset(A.singleton_closure(p)) for p in A.points}
    for name, cells in (("A", cells_a), ("X", cells_x), ("Y", cells_y)):
        if not _idempotent(cells):
            raise NotTopologicalError(f"{name} is not topological")

    graph = nx.Graph()
    graph.add_nodes_from(("Y", y) for y in Y.points)
    graph.add_nodes_from(("X", x) for x in X.points)
    fa, ia = f.assignment, i.assignment
    graph.add_edges_from((("Y", fa[a]), ("X", ia[a])) for a in A.points)
    groups = [sorted(c, key=lambda s: (s[0], label_key(s[1]))) for c in nx.connected_components(graph)]
    groups.sort(key=lambda grp: [(s[0], label_key(s[1])) for s in grp])
    names = canonical_names(groups, {"Y": 0, "X": 1})
    where = {src: name for grp, name in zip(groups, names) for src in grp}
    if len(names) > MAX_POINTS:
        raise ValueError(f"oracle enumerates subsets; {len(names)} points is too many")

    closed = []
    for r in range(len(names) + 1):
        for combo in combinations(names, r):
            cand = frozenset(combo)
            pre_x = frozenset(x for x in X.points if where[("X", x)] in cand)
            pre_y = frozenset(y for y in Y.points if where[("Y", y)] in cand)
            if _is_closed(cells_x, pre_x) and _is_closed(cells_y, pre_y):
                closed.append(cand)

    everything = frozenset(names)
    closure = {}
    for z in names:
        hull = everything
        for c in closed:
            if z in c:
                hull = hull & c
        closure[z] = hull
    return FiniteClosureSpace(names, closure)
