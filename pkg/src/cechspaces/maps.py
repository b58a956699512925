"""Maps of closure spaces, subspaces and closed inclusions."""

from __future__ import annotations

from typing import Iterable, Mapping

from .core import FiniteClosureSpace, ForeignPointError, iter_bits
from .labels import Label, sort_labels

# closedInclusionConditions clause (3) enumerates every B ⊆ A up to this size
_SUBSET_LIMIT = 14


class MapError(ValueError):
    """Raised for assignments that are not total functions between carriers."""


class SpaceMap:
    """A function between the carriers of two closure spaces.

    Being a function is enforced on construction; being a map of closure
    spaces (continuity) is a predicate, see :meth:`is_continuous`.
    """

    __slots__ = ("domain", "codomain", "_assignment", "_targets")

    def __init__(
        self,
        domain: FiniteClosureSpace,
        codomain: FiniteClosureSpace,
        assignment: Mapping[Label, Label],
    ):
        missing = [p for p in domain.points if p not in assignment]
        if missing:
            raise MapError(f"assignment undefined on {sort_labels(missing)!r}")
        extra = [p for p in assignment if p not in domain]
        if extra:
            raise MapError(f"assignment mentions non-domain points {sort_labels(extra)!r}")
        try:
            targets = tuple(codomain.index(assignment[p]) for p in domain.points)
        except ForeignPointError as exc:
            raise MapError(f"assignment leaves the codomain: {exc}") from None
        self.domain = domain
        self.codomain = codomain
        self._assignment = {p: assignment[p] for p in domain.points}
        self._targets = targets

    @classmethod
    def identity(cls, space: FiniteClosureSpace) -> SpaceMap:
        return cls(space, space, {p: p for p in space.points})

    @classmethod
    def constant(cls, domain, codomain, value) -> SpaceMap:
        return cls(domain, codomain, {p: value for p in domain.points})

    @property
    def assignment(self) -> dict:
        return dict(self._assignment)

    @property
    def targets(self) -> tuple[int, ...]:
        """Codomain index of the image of each domain point, by domain index."""
        return self._targets

    def __call__(self, p: Label) -> Label:
        return self._assignment[p]

    # -- images -----------------------------------------------------------

    def image_mask(self, mask: int) -> int:
        out = 0
        t = self._targets
        for k in iter_bits(mask):
            out |= 1 << t[k]
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for k, t in enumerate(self._targets):
            if mask >> t & 1:
                out |= 1 << k
        return out

    def image(self, subset: Iterable[Label]) -> frozenset:
        return self.codomain.subset(self.image_mask(self.domain.mask(subset)))

    def preimage(self, subset: Iterable[Label]) -> frozenset:
        return self.domain.subset(self.preimage_mask(self.codomain.mask(subset)))

    def is_injective(self) -> bool:
        return len(set(self._targets)) == len(self._targets)

    def is_surjective(self) -> bool:
        return len(set(self._targets)) == len(self.codomain)

    # -- predicates -------------------------------------------------------

    def is_continuous(self) -> bool:
        """Whether ``f(c_X A) ⊆ c_Y f(A)`` for every ``A``.

        Both sides are additive in ``A``, so checking singletons suffices:
        ``f(c{p}) ⊆ c{f(p)}`` for every point ``p``.
        """
        cy = self.codomain.singleton_masks
        return all(
            self.image_mask(m) & ~cy[t] == 0
            for m, t in zip(self.domain.singleton_masks, self._targets)
        )

    def is_closed_map(self) -> bool:
        """Whether the image of every closed subset of the domain is closed."""
        cod = self.codomain
        for m in self.domain.closed_masks():
            img = self.image_mask(m)
            if cod.cl_mask(img) != img:
                return False
        return True

    def compose(self, other: SpaceMap) -> SpaceMap:
        """``other ∘ self``: first apply this map, then ``other``."""
        if other.domain != self.codomain:
            raise MapError("maps are not composable")
        return SpaceMap(
            self.domain,
            other.codomain,
            {p: other(self(p)) for p in self.domain.points},
        )

    def __eq__(self, other):
        if not isinstance(other, SpaceMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self._assignment == other._assignment
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self._targets))

    def __repr__(self):
        pairs = ", ".join(f"{p!r}: {q!r}" for p, q in self._assignment.items())
        return f"SpaceMap({{{pairs}}})"


def subspace(space: FiniteClosureSpace, subset: Iterable[Label]) -> FiniteClosureSpace:
    """``(A, c_A)`` with ``c_A B = c_X B ∩ A``."""
    m = space.mask(subset)
    pts = [space.points[k] for k in iter_bits(m)]
    return FiniteClosureSpace(
        pts,
        {p: space.subset(space.singleton_masks[space.index(p)] & m) for p in pts},
    )


def inclusion(space: FiniteClosureSpace, subset: Iterable[Label]) -> SpaceMap:
    """The inclusion of the subspace on ``subset`` into ``space``."""
    sub = subspace(space, subset)
    return SpaceMap(sub, space, {p: p for p in sub.points})


def is_embedding(f: SpaceMap) -> bool:
    """Whether ``f`` is injective and its domain carries the subspace closure of its image."""
    if not f.is_injective():
        return False
    img = f.image_mask(f.domain.full_mask)
    cy = f.codomain.singleton_masks
    return all(
        f.image_mask(m) == cy[t] & img
        for m, t in zip(f.domain.singleton_masks, f.targets)
    )


def closed_inclusion_conditions(
    space: FiniteClosureSpace, subset: Iterable[Label]
) -> tuple[bool, bool, bool]:
    """The three conditions characterising a closed inclusion ``A ⊆ X``.

    Each is evaluated on its own terms:

    1. the inclusion is a closed map (closed sets of ``c_A`` stay closed in ``X``;
       this enumerates every closed set, so it is exponential in ``|A|``),
    2. ``c_X A = A``,
    3. ``c_A B = c_X B`` for every ``B ⊆ A``.
    """
    incl = inclusion(space, subset)
    first = incl.is_closed_map()

    m = space.mask(subset)
    second = space.cl_mask(m) == m

    sub = incl.domain
    if len(sub) <= _SUBSET_LIMIT:
        candidates = range(1 << len(sub))
    else:
        candidates = (1 << k for k in range(len(sub)))
    third = all(
        incl.image_mask(sub.cl_mask(b)) == space.cl_mask(incl.image_mask(b))
        for b in candidates
    )
    return first, second, third


def is_closed_inclusion(f: SpaceMap) -> bool:
    """Whether ``f`` is an embedding onto a closed subset of its codomain."""
    if not is_embedding(f):
        return False
    img = f.image_mask(f.domain.full_mask)
    return f.codomain.cl_mask(img) == img
