"""Checks of the pushout theorems on concrete instances, and counterexample mining.

Theorem checks return reports rather than raising: when a hypothesis fails
the report says so, and the implication under test is marked as not
applicable instead of passing silently.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .cells import CWComplex, StageSpec, build_cw
from .colimits import PushoutResult, Span, pushout
from .core import FiniteClosureSpace, iter_bits
from .documents import span_to_doc
from .labels import sort_labels, to_json
from .maps import SpaceMap, inclusion, is_closed_inclusion, subspace
from .toporacle import top_pushout_oracle
from .universe import iso_class_masks, random_span, spaces

NON_IDEMPOTENT = "non-idempotent-pushout"
HYPOTHESIS_FAILURE = "hypothesis-failure"
UNIVERSAL_FAILURE = "universal-property-failure"


def condition_b(space: FiniteClosureSpace, subset) -> bool:
    """Whether every closed ``C ⊆ A`` equals ``c_X(B) ∩ A`` for some ``B ⊆ X ∖ A``."""
    a = space.mask(subset)
    outside = list(iter_bits(space.full_mask & ~a))
    reachable = set()
    for bits in range(1 << len(outside)):
        b = 0
        for t, k in enumerate(outside):
            if bits >> t & 1:
                b |= 1 << k
        reachable.add(space.cl_mask(b) & a)
    incl = inclusion(space, subset)
    return all(incl.image_mask(c) in reachable for c in incl.domain.closed_masks())


def non_idempotent_witness(space: FiniteClosureSpace):
    """Least point ``p`` with ``c(c{p}) != c{p}``, as a one-point set, or ``None``.

    By additivity a space is topological iff no such point exists.
    """
    for p, m in zip(space.points, space.singleton_masks):
        if space.cl_mask(m) != m:
            return frozenset([p])
    return None


# -- Theorem: pushouts along closed inclusions ---------------------------


@dataclass
class Prop1Report:
    """Outcome of checking both directions of the closed-map criterion on one span."""

    hypotheses: dict
    f_closed: bool | None = None
    condition_b: bool | None = None
    pushout_topological: bool | None = None
    tau_matches_oracle: bool | None = None
    pushout_equals_oracle: bool | None = None
    witness: frozenset | None = None
    result: PushoutResult | None = field(default=None, repr=False)

    @property
    def hypotheses_met(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def part1(self) -> bool | None:
        """f closed  implies  pushout agrees with Top (``None`` if not applicable)."""
        if not self.hypotheses_met:
            return None
        return (not self.f_closed) or bool(self.pushout_topological and self.pushout_equals_oracle)

    @property
    def part2(self) -> bool | None:
        """pushout agrees with Top and condition B  implies  f closed."""
        if not self.hypotheses_met:
            return None
        return (not (self.pushout_topological and self.condition_b)) or self.f_closed

    @property
    def ok(self) -> bool:
        return self.hypotheses_met and bool(self.part1 and self.part2 and self.tau_matches_oracle)

    def narrative(self) -> dict:
        out = {f"hypothesis: {k}": v for k, v in self.hypotheses.items()}
        out.update(
            {
                "f closed": self.f_closed,
                "condition B": self.condition_b,
                "pushout topological": self.pushout_topological,
                "tau(pushout) equals Top pushout": self.tau_matches_oracle,
                "f closed implies agreement": self.part1,
                "agreement and condition B imply f closed": self.part2,
            }
        )
        return out


def check_theorem_prop1(span: Span) -> Prop1Report:
    hyp = {
        "A topological": span.A.is_topological(),
        "X topological": span.X.is_topological(),
        "Y topological": span.Y.is_topological(),
        "i closed inclusion": is_closed_inclusion(span.i),
    }
    report = Prop1Report(hyp)
    if not report.hypotheses_met:
        return report
    res = pushout(span)
    oracle = top_pushout_oracle(span)
    report.result = res
    report.f_closed = span.f.is_closed_map()
    report.condition_b = condition_b(span.X, span.i.image(span.A.points))
    report.witness = non_idempotent_witness(res.Z)
    report.pushout_topological = report.witness is None
    report.tau_matches_oracle = res.Z.topological_modification() == oracle
    report.pushout_equals_oracle = res.Z == oracle
    return report


# -- Theorem: finite CW builds with closed attaching maps -----------------


class StageCheck(NamedTuple):
    stage: int
    attaching_closed: bool
    hypotheses_met: bool
    topological: bool


@dataclass
class MainReport:
    base_topological: bool
    stages: list
    complex: CWComplex | None = field(default=None, repr=False)

    @property
    def failures(self) -> list:
        return [s for s in self.stages if s.hypotheses_met and not s.topological]

    @property
    def flagged(self) -> list:
        """Stages whose hypotheses are unmet (the theorem says nothing about them)."""
        return [s for s in self.stages if not s.hypotheses_met]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None


def check_theorem_main(base: FiniteClosureSpace, stages: Sequence[StageSpec]) -> MainReport:
    """Build the complex and check each stage whose hypotheses hold is topological.

    A stage's hypotheses hold when the base is topological and it and every
    earlier stage attach along closed maps.
    """
    cw = build_cw(base, stages)
    met = base.is_topological()
    report = MainReport(met, [], cw)
    for n, st in enumerate(cw.stages):
        phi = st.attachment.attaching_span().f
        closed = phi.is_closed_map()
        met = met and closed
        report.stages.append(StageCheck(n, closed, met, st.space.is_topological()))
    return report


# -- certificates and mining ---------------------------------------------


@dataclass(frozen=True)
class Certificate:
    kind: str
    span: Span
    witness: frozenset = frozenset()
    narrative: dict = field(default_factory=dict, compare=False)

    def replays(self) -> bool:
        """For non-idempotent-pushout certificates: ``c(c(W)) != c(W)`` for the witness ``W``."""
        Z = pushout(self.span).Z
        once = Z.closure(self.witness)
        return Z.closure(once) != once

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "span": span_to_doc(self.span),
            "witness": [to_json(p) for p in sort_labels(self.witness)],
            "narrative": self.narrative,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)


@dataclass(frozen=True)
class Bounds:
    """Sizes enumerated exhaustively, and the larger sizes sampled at random."""

    a: int = 3
    x: int = 4
    y: int = 4
    random_a: int = 4
    random_x: int = 6
    random_y: int = 6


def closed_inclusion_spans(
    bounds: Bounds, require_closed_f: bool = False, filter_f=None
) -> Iterator[Span]:
    """Every span of topological spaces within ``bounds`` whose i-leg is a closed inclusion.

    ``X`` and ``Y`` range over isomorphism classes; ``A`` over all closed
    subsets of ``X`` of size at most ``bounds.a``; ``f`` over all continuous
    maps (closed ones only with ``require_closed_f``).
    """
    xs = [s for n in range(bounds.x + 1) for s in spaces(n, topological=True, up_to_iso=True)]
    ys = [s for n in range(bounds.y + 1) for s in spaces(n, topological=True, up_to_iso=True)]
    for X in xs:
        for a_mask in X.closed_masks():
            if bin(a_mask).count("1") > bounds.a:
                continue
            i = inclusion(X, X.subset(a_mask))
            A = i.domain
            for Y in ys:
                for values in cartesian(Y.points, repeat=len(A)):
                    f = SpaceMap(A, Y, dict(zip(A.points, values)))
                    if not f.is_continuous():
                        continue
                    if require_closed_f and not f.is_closed_map():
                        continue
                    if filter_f is not None and not filter_f(f):
                        continue
                    yield Span(A, f, i)


def _random_closed_inclusion_spans(bounds: Bounds, rng: random.Random, require_closed_f: bool):
    while True:
        span = random_span(
            rng, bounds.random_a, bounds.random_x, bounds.random_y,
            topological=True, closed_inclusion=True,
        )
        if require_closed_f and not span.f.is_closed_map():
            continue
        yield span


def _certify(span: Span) -> Certificate | None:
    rep = check_theorem_prop1(span)
    if not rep.hypotheses_met:
        return Certificate(HYPOTHESIS_FAILURE, span, frozenset(), rep.narrative())
    if rep.witness is None:
        return None
    return Certificate(NON_IDEMPOTENT, span, rep.witness, rep.narrative())


def mine_counterexamples(
    bounds: Bounds = Bounds(),
    budget: int = 10_000,
    seed: int = 0,
    require_closed_f: bool = False,
) -> list[Certificate]:
    """Certificates for every examined span whose pushout is not topological.

    Spans within ``bounds`` are examined exhaustively in a fixed order; once
    those run out, the rest of the ``budget`` goes to random spans of the
    larger sizes drawn from ``random.Random(seed)``. Output is sorted by
    JSON record, so it depends only on the arguments.
    """
    if budget <= 0:
        return []
    rng = random.Random(seed)
    stream = _chain(
        closed_inclusion_spans(bounds, require_closed_f),
        _random_closed_inclusion_spans(bounds, rng, require_closed_f),
    )
    out = []
    for _, span in zip(range(budget), stream):
        cert = _certify(span)
        if cert is not None:
            out.append(cert)
    out.sort(key=Certificate.to_json)
    return out


def _chain(*iterables):
    for it in iterables:
        yield from it


# -- universal property ---------------------------------------------------


def _all_functions(d: int, n: int) -> np.ndarray:
    rows = list(cartesian(range(n), repeat=d))
    return np.array(rows, dtype=np.int64).reshape(len(rows), d)


def _closure_pairs(space: FiniteClosureSpace) -> tuple[np.ndarray, np.ndarray]:
    src, dst = [], []
    for k, m in enumerate(space.singleton_masks):
        for w in iter_bits(m):
            src.append(k)
            dst.append(w)
    return np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)


def _continuous(funcs: np.ndarray, pairs, member: np.ndarray) -> np.ndarray:
    """``(S, N)`` table: is function ``N`` continuous into test space ``S``."""
    src, dst = pairs
    if len(src) == 0:
        return np.ones((member.shape[0], funcs.shape[0]), dtype=bool)
    hit = member[:, funcs[:, src], funcs[:, dst]]
    return hit.all(axis=2)


def _membership(n: int) -> np.ndarray:
    reps = iso_class_masks(n, topological=False)
    out = np.zeros((len(reps), n, n), dtype=bool)
    for s, masks in enumerate(reps):
        for a, m in enumerate(masks):
            for b in iter_bits(m):
                out[s, a, b] = True
    return out


def verify_universal_property(result: PushoutResult, cocone_bound: int = 4) -> bool:
    """Brute-force the pushout's universal property against small test spaces.

    For every closure space ``W`` with at most ``cocone_bound`` points (one
    per isomorphism class) and every pair of continuous maps ``y: Y -> W``,
    ``x: X -> W`` with ``y f = x i``, counts the continuous ``u: Z -> W`` with
    ``u j = y`` and ``u g = x``. True iff every such count is exactly one and
    no continuous ``u`` yields anything but such a pair.
    """
    span, Z, j, g = result.span, result.Z, result.j, result.g
    X, Y, A = span.X, span.Y, span.A
    if j.domain != Y or g.domain != X or j.codomain != Z or g.codomain != Z:
        return False
    if not (j.is_continuous() and g.is_continuous()):
        return False
    if any(j(span.f(a)) != g(span.i(a)) for a in A.points):
        return False

    f_idx = np.array(span.f.targets, dtype=np.int64)
    i_idx = np.array(span.i.targets, dtype=np.int64)
    j_idx = np.array(j.targets, dtype=np.int64)
    g_idx = np.array(g.targets, dtype=np.int64)
    pairs_x, pairs_y, pairs_z = _closure_pairs(X), _closure_pairs(Y), _closure_pairs(Z)

    for n in range(cocone_bound + 1):
        member = _membership(n)
        fx, fy, fz = _all_functions(len(X), n), _all_functions(len(Y), n), _all_functions(len(Z), n)
        nx_, ny_ = len(fx), len(fy)
        if nx_ == 0 or ny_ == 0:
            continue
        cont_x = _continuous(fx, pairs_x, member)
        cont_y = _continuous(fy, pairs_y, member)
        cont_z = _continuous(fz, pairs_z, member) if len(fz) else np.zeros((len(member), 0), bool)
        compat = (fy[:, f_idx][:, None, :] == fx[:, i_idx][None, :, :]).all(axis=2)
        cocones = cont_y[:, :, None] & cont_x[:, None, :] & compat[None]
        cocones = cocones.reshape(len(member), -1)

        radix_x = n ** np.arange(len(X) - 1, -1, -1, dtype=np.int64)
        radix_y = n ** np.arange(len(Y) - 1, -1, -1, dtype=np.int64)
        key = (fz[:, j_idx] @ radix_y) * nx_ + fz[:, g_idx] @ radix_x
        counts = np.zeros_like(cocones, dtype=np.int64)
        s_idx, u_idx = np.nonzero(cont_z)
        np.add.at(counts, (s_idx, key[u_idx]), 1)
        if not (counts[cocones] == 1).all() or (counts[~cocones] != 0).any():
            return False
    return True


def mutate_closure(result: PushoutResult, point, extra) -> PushoutResult:
    """Copy of ``result`` with ``extra`` added to the closure of ``point``."""
    Z = result.Z
    closure = {p: set(Z.singleton_closure(p)) for p in Z.points}
    closure[point].add(extra)
    bad = FiniteClosureSpace(Z.points, closure)
    return PushoutResult(
        result.span,
        bad,
        SpaceMap(result.j.domain, bad, result.j.assignment),
        SpaceMap(result.g.domain, bad, result.g.assignment),
        dict(result.provenance),
    )


def universal_property_certificate(result: PushoutResult, cocone_bound: int = 4):
    if verify_universal_property(result, cocone_bound):
        return None
    return Certificate(UNIVERSAL_FAILURE, result.span, frozenset(), {"cocone bound": cocone_bound})
