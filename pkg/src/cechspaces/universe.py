"""Small-instance universes: exhaustive and seeded random generation."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product

from .core import FiniteClosureSpace
from .maps import SpaceMap, inclusion


def _closure_mask_tuples(n: int):
    choices = []
    for k in range(n):
        others = [j for j in range(n) if j != k]
        opts = []
        for bits in range(1 << (n - 1)):
            m = 1 << k
            for t, j in enumerate(others):
                if bits >> t & 1:
                    m |= 1 << j
            opts.append(m)
        choices.append(opts)
    return product(*choices)


def _cl(masks, m):
    out = 0
    k = 0
    while m:
        if m & 1:
            out |= masks[k]
        m >>= 1
        k += 1
    return out


def _idempotent(masks) -> bool:
    return all(_cl(masks, m) == m for m in masks)


@lru_cache(maxsize=None)
def all_closure_masks(n: int) -> tuple:
    """Every closure operator on ``range(n)``, as tuples of singleton masks."""
    return tuple(_closure_mask_tuples(n))


@lru_cache(maxsize=None)
def all_topology_masks(n: int) -> tuple:
    return tuple(m for m in all_closure_masks(n) if _idempotent(m))


def canonical_masks(masks) -> tuple:
    """Least relabeling of ``masks`` over all permutations of the points."""
    n = len(masks)
    best = None
    for perm in permutations(range(n)):
        new = [0] * n
        for k, m in enumerate(masks):
            img = 0
            for j in range(n):
                if m >> j & 1:
                    img |= 1 << perm[j]
            new[perm[k]] = img
        cand = tuple(new)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


@lru_cache(maxsize=None)
def iso_class_masks(n: int, topological: bool) -> tuple:
    """One mask tuple per isomorphism class, in canonical form."""
    pool = all_topology_masks(n) if topological else all_closure_masks(n)
    return tuple(sorted({canonical_masks(m) for m in pool}))


def spaces(n: int, topological: bool = False, up_to_iso: bool = False) -> list:
    """All closure spaces (or topologies) on the points ``0..n-1``."""
    if up_to_iso:
        pool = iso_class_masks(n, topological)
    else:
        pool = all_topology_masks(n) if topological else all_closure_masks(n)
    return [FiniteClosureSpace.from_masks(range(n), m) for m in pool]


def functions(domain: FiniteClosureSpace, codomain: FiniteClosureSpace):
    """Every function between the carriers, as :class:`SpaceMap`."""
    for values in product(codomain.points, repeat=len(domain)):
        yield SpaceMap(domain, codomain, dict(zip(domain.points, values)))


# -- random generation ---------------------------------------------------


def random_space(rng: random.Random, n: int, topological: bool = False, density: float = 0.3):
    """A random closure space on ``0..n-1``; topological ones are tau of a random one."""
    masks = []
    for k in range(n):
        m = 1 << k
        for j in range(n):
            if j != k and rng.random() < density:
                m |= 1 << j
        masks.append(m)
    space = FiniteClosureSpace.from_masks(range(n), masks)
    return space.topological_modification() if topological else space


def random_map(rng: random.Random, domain, codomain, tries: int = 20) -> SpaceMap:
    """A random continuous map; falls back to a constant map (always continuous)."""
    if len(codomain) == 0:
        return SpaceMap(domain, codomain, {})
    for _ in range(tries):
        f = SpaceMap(domain, codomain, {p: rng.choice(codomain.points) for p in domain.points})
        if f.is_continuous():
            return f
    return SpaceMap.constant(domain, codomain, rng.choice(codomain.points))


def random_closed_subset(rng: random.Random, space, max_size: int) -> frozenset:
    options = [m for m in space.closed_masks() if bin(m).count("1") <= max_size]
    return space.subset(rng.choice(options))


def random_span(
    rng: random.Random,
    max_a: int = 2,
    max_x: int = 3,
    max_y: int = 3,
    topological: bool = False,
    closed_inclusion: bool = False,
):
    """A random span ``X <-i- A -f-> Y`` with continuous legs.

    With ``closed_inclusion`` the i-leg includes a closed subspace of ``X``;
    otherwise ``A`` is a random space and ``i`` a random continuous map.
    """
    from .colimits import Span

    X = random_space(rng, rng.randint(0, max_x), topological)
    Y = random_space(rng, rng.randint(0, max_y), topological)
    if closed_inclusion:
        i = inclusion(X, random_closed_subset(rng, X, max_a if len(Y) else 0))
        A = i.domain
    else:
        a = rng.randint(0, max_a) if len(X) and len(Y) else 0
        A = random_space(rng, a, topological)
        i = random_map(rng, A, X)
    return Span(A, random_map(rng, A, Y), i)


def random_cw_script(
    rng: random.Random,
    max_stages: int = 3,
    max_cells: int = 3,
    max_base: int = 3,
    closed_attaching: bool = True,
    tries: int = 30,
):
    """A random base space and CW stage specs of strictly increasing dimension.

    Attaching maps are random continuous maps (closed ones when
    ``closed_attaching``), falling back to a constant map onto a closed point.
    A cell with no closed attaching map available is left out.
    """
    from .cells import STYLES, StageSpec, build_cw, sphere_model

    base = random_space(rng, rng.randint(0, max_base), topological=True)
    first_dim = rng.randint(0, 1)
    stages = []
    current = base
    for n in range(rng.randint(0, max_stages)):
        dim = first_dim + n
        sphere = sphere_model(dim - 1)
        count = rng.randint(0, max_cells) if len(current) or not len(sphere) else 0
        cells = []
        for _ in range(count):
            assignment = _random_attaching(rng, sphere, current, closed_attaching, tries)
            if assignment is not None:
                cells.append(assignment)
        stages.append(StageSpec(dim, tuple(cells), rng.choice(STYLES)))
        current = build_cw(base, stages).top
    return base, stages


def _random_attaching(rng, sphere, target, closed, tries):
    for _ in range(tries):
        f = SpaceMap(sphere, target, {p: rng.choice(target.points) for p in sphere.points})
        if f.is_continuous() and (not closed or f.is_closed_map()):
            return f.assignment
    closed_points = [p for k, p in enumerate(target.points) if target.singleton_masks[k] == 1 << k]
    if closed_points:
        anchor = rng.choice(closed_points)
    elif closed and len(sphere):
        return None  # no closed map from a nonempty sphere exists
    else:
        anchor = rng.choice(target.points)
    return {p: anchor for p in sphere.points}
