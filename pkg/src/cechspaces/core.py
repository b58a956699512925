"""Finite closure spaces.

A closure operator on a finite set is additive, so it is fixed by the images
of singletons: ``c(A)`` is the union of ``c{p}`` over ``p`` in ``A`` and
``c(∅) = ∅``. Spaces store exactly those singleton images. Subsets are exposed
as frozensets of labels; internally every subset is an ``int`` bitmask whose
bit ``k`` stands for ``points[k]``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple

from .labels import Label, sort_labels

# above this size closed sets are generated from closures instead of filtered
_FILTER_LIMIT = 12


class ClosureAxiomError(ValueError):
    """Raised when singleton closures violate extensivity or containment."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class ForeignPointError(ValueError):
    """Raised when a subset mentions points outside the carrier."""


class Violation(NamedTuple):
    kind: str  # "extensivity" | "containment" | "missing"
    point: Label
    detail: str

    def __str__(self):
        return f"{self.kind} violation at {self.point!r}: {self.detail}"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteClosureSpace:
    """A finite set with a closure operator given by its singleton images.

    Parameters
    ----------
    points
        The carrier. Labels must be ints, strings or tuples of those.
    closure
        Map from point to the points of its closure. Points missing from the
        map get ``{p}``.
    check
        Run :func:`validate` and raise :class:`ClosureAxiomError` on failure.
        Pass ``False`` only to build deliberately malformed inputs for
        :func:`validate`.
    """

    __slots__ = ("_points", "_index", "_raw", "_masks", "_hash")

    def __init__(
        self,
        points: Iterable[Label],
        closure: Mapping[Label, Iterable[Label]] | None = None,
        *,
        check: bool = True,
    ):
        pts = tuple(sort_labels(set(points)))
        closure = closure or {}
        self._points = pts
        self._index = {p: k for k, p in enumerate(pts)}
        self._raw = {p: frozenset(closure.get(p, (p,))) for p in pts}
        self._raw.update(
            {p: frozenset(v) for p, v in closure.items() if p not in self._index}
        )
        self._masks = tuple(
            _mask_of(self._index, self._raw[p], strict=False) for p in pts
        )
        self._hash = None
        if check:
            problems = validate(self)
            if problems:
                raise ClosureAxiomError(problems)

    @classmethod
    def from_masks(cls, points: Iterable[Label], masks: Iterable[int]):
        """Build a space from sorted points and per-point closure bitmasks."""
        pts = tuple(points)
        masks = tuple(masks)
        closure = {
            p: [pts[k] for k in iter_bits(m)] for p, m in zip(pts, masks)
        }
        space = cls(pts, closure)
        if space.points != pts:
            raise ValueError("points must already be in canonical label order")
        return space

    @classmethod
    def discrete(cls, points: Iterable[Label]):
        return cls(points)

    @classmethod
    def indiscrete(cls, points: Iterable[Label]):
        pts = list(points)
        return cls(pts, {p: pts for p in pts})

    # -- carrier ----------------------------------------------------------

    @property
    def points(self) -> tuple:
        return self._points

    @property
    def singleton_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << len(self._points)) - 1

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __contains__(self, p):
        return p in self._index

    def index(self, p: Label) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise ForeignPointError(f"{p!r} is not a point of this space") from None

    def mask(self, subset: Iterable[Label]) -> int:
        return _mask_of(self._index, subset, strict=True)

    def subset(self, mask: int) -> frozenset:
        return frozenset(self._points[k] for k in iter_bits(mask))

    def singleton_closure(self, p: Label) -> frozenset:
        """The stored image ``c{p}`` (unvalidated spaces may list foreign points)."""
        if p not in self._raw:
            raise ForeignPointError(f"{p!r} is not a point of this space")
        return self._raw[p]

    # -- the operator -----------------------------------------------------

    def cl_mask(self, mask: int) -> int:
        out = 0
        masks = self._masks
        while mask:
            low = mask & -mask
            out |= masks[low.bit_length() - 1]
            mask ^= low
        return out

    def closure(self, subset: Iterable[Label]) -> frozenset:
        """``c(A)``; the empty set maps to the empty set."""
        return self.subset(self.cl_mask(self.mask(subset)))

    def is_closed(self, subset: Iterable[Label]) -> bool:
        m = self.mask(subset)
        return self.cl_mask(m) == m

    def is_topological(self) -> bool:
        """Whether ``c`` is idempotent.

        By additivity ``c(c(A))`` is the union of ``c(c{p})`` for ``p`` in
        ``A``, so it suffices to check ``c(c{p}) = c{p}`` for each point.
        """
        return all(self.cl_mask(m) == m for m in self._masks)

    def topological_modification(self) -> FiniteClosureSpace:
        """The finest topological closure coarser than this one.

        Iterates ``c`` on each singleton until it stabilises, which happens
        after at most ``len(self)`` steps.
        """
        masks = []
        for m in self._masks:
            nxt = self.cl_mask(m)
            while nxt != m:
                m, nxt = nxt, self.cl_mask(nxt)
            masks.append(m)
        return FiniteClosureSpace.from_masks(self._points, masks)

    def closed_masks(self) -> list[int]:
        """Bitmasks of all closed subsets, in increasing numeric order."""
        n = len(self._points)
        if n <= _FILTER_LIMIT:
            return [m for m in range(1 << n) if self.cl_mask(m) == m]
        # closed sets of c are those of tau(c): unions of tau-closures of points
        gens = self.topological_modification().singleton_masks
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    t = s | g
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return sorted(seen)

    def closed_sets(self) -> list[frozenset]:
        return [self.subset(m) for m in self.closed_masks()]

    # -- derived spaces ---------------------------------------------------

    def relabel(self, mapping: Mapping[Label, Label]) -> FiniteClosureSpace:
        """Copy of the space with every point ``p`` renamed ``mapping[p]``."""
        new = [mapping[p] for p in self._points]
        if len(set(new)) != len(new):
            raise ValueError("relabeling must be injective")
        return FiniteClosureSpace(
            new, {mapping[p]: [mapping[q] for q in self._raw[p]] for p in self._points}
        )

    def closure_map(self) -> dict:
        """``{p: c{p}}`` with closures as sorted lists."""
        return {p: sort_labels(self._raw[p]) for p in self._points}

    # -- value semantics --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FiniteClosureSpace):
            return NotImplemented
        return self._points == other._points and self._masks == other._masks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._points, self._masks))
        return self._hash

    def __repr__(self):
        body = ", ".join(
            f"{p!r}: {{{', '.join(repr(q) for q in sort_labels(self._raw[p]))}}}"
            for p in self._points
        )
        return f"FiniteClosureSpace({{{body}}})"


def _mask_of(index: Mapping[Label, int], subset: Iterable[Label], strict: bool) -> int:
    m = 0
    for p in subset:
        k = index.get(p)
        if k is None:
            if strict:
                raise ForeignPointError(f"{p!r} is not a point of this space")
            continue
        m |= 1 << k
    return m


def validate(space: FiniteClosureSpace) -> list[Violation]:
    """List every way the stored singleton closures break the axioms.

    Additivity and ``c(∅) = ∅`` hold by construction, so only extensivity
    (``p ∈ c{p}``) and containment (``c{p} ⊆ points``) can fail. Closure
    entries for points outside the carrier are reported as ``missing``.
    """
    out = []
    carrier = set(space.points)
    for p in space.points:
        img = space.singleton_closure(p)
        if p not in img:
            out.append(Violation("extensivity", p, f"{p!r} not in its own closure"))
        foreign = img - carrier
        if foreign:
            names = ", ".join(repr(q) for q in sort_labels(foreign))
            out.append(Violation("containment", p, f"closure mentions {names}"))
    for p in space._raw:
        if p not in carrier:
            out.append(Violation("missing", p, "closure given for a point not in the carrier"))
    return out


def empty_space() -> FiniteClosureSpace:
    return FiniteClosureSpace(())

