import json
import random
from pathlib import Path

import pytest

import oracles
from cechspaces import (
    Bounds,
    FiniteClosureSpace,
    Span,
    SpaceMap,
    StageSpec,
    check_theorem_main,
    check_theorem_prop1,
    condition_b,
    disk_model,
    inclusion,
    mine_counterexamples,
    pseudo_interval,
    pushout,
    sphere_model,
    verify_universal_property,
)
from cechspaces.documents import cw_script_from_doc, load_json
from cechspaces.verify import (
    HYPOTHESIS_FAILURE,
    NON_IDEMPOTENT,
    closed_inclusion_spans,
    mutate_closure,
    non_idempotent_witness,
    universal_property_certificate,
)
from cechspaces.universe import functions, random_span, spaces
from conftest import make_ex1_span

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def _brute_condition_b(X, A):
    A = frozenset(A)
    outside = [p for p in X.points if p not in A]
    reachable = {oracles.closure(X, B) & A for B in oracles.subsets(outside)}
    sub_closed = [C for C in oracles.subsets(A) if oracles.closure(X, C) & A == C]
    return all(C in reachable for C in sub_closed)


# -- condition B -------------------------------------------------------------


def test_condition_b_fails_on_interval_endpoints(interval):
    assert not condition_b(interval, {"p", "q"})
    assert not _brute_condition_b(interval, {"p", "q"})


def test_condition_b_holds_on_cylinder():
    S0 = sphere_model(0)
    cyl, boundary = disk_model(S0, "cylinder")
    assert condition_b(cyl, boundary.image(S0.points))


def test_condition_b_trivial_on_empty(z3):
    assert condition_b(z3, set())


@pytest.mark.parametrize("seed", range(100))
def test_condition_b_matches_brute_force(seed):
    rng = random.Random(seed)
    span = random_span(rng, 3, 5, 1, topological=True, closed_inclusion=True)
    A = span.i.image(span.A.points)
    assert condition_b(span.X, A) == _brute_condition_b(span.X, A)


def test_non_idempotent_witness(z3):
    assert non_idempotent_witness(z3) == {0}
    assert non_idempotent_witness(z3.topological_modification()) is None


# -- closed-map criterion for pushouts ---------------------------------------


def test_prop1_on_indiscrete_target(ex1_span):
    rep = check_theorem_prop1(ex1_span)
    assert rep.hypotheses_met
    assert rep.f_closed is False
    assert rep.condition_b is False
    assert rep.pushout_topological is False
    assert rep.witness == {"m"}
    assert rep.tau_matches_oracle
    assert rep.part1 and rep.part2 and rep.ok
    Z = rep.result.Z
    assert Z.closure({"m"}) == {0, "m"}
    assert Z.closure(Z.closure({"m"})) == {0, 1, "m"}


def test_prop1_on_point_target():
    rep = check_theorem_prop1(make_ex1_span(FiniteClosureSpace([0])))
    assert rep.f_closed and rep.pushout_topological and rep.pushout_equals_oracle
    assert rep.condition_b is False
    assert rep.ok


def test_prop1_cylinder_with_non_closed_f():
    S0 = sphere_model(0)
    cyl, boundary = disk_model(S0, "cylinder")
    i = inclusion(cyl, boundary.image(S0.points))
    Y = FiniteClosureSpace.indiscrete([0, 1])
    f = SpaceMap.constant(i.domain, Y, 0)
    rep = check_theorem_prop1(Span(i.domain, f, i))
    assert rep.condition_b and not rep.f_closed
    # both directions hold: with condition B, a non-closed f must break agreement
    assert not rep.pushout_topological or not rep.pushout_equals_oracle
    assert rep.ok


def test_prop1_unmet_hypotheses(z3, sierpinski):
    i = inclusion(z3, {0, 1})
    span = Span(i.domain, SpaceMap.constant(i.domain, sierpinski, "a"), i)
    rep = check_theorem_prop1(span)
    assert not rep.hypotheses_met
    assert rep.part1 is None and rep.part2 is None and not rep.ok
    assert rep.narrative()["hypothesis: X topological"] is False


def test_prop1_narrative_keys(ex1_span):
    text = check_theorem_prop1(ex1_span).narrative()
    assert text["f closed"] is False
    assert text["f closed implies agreement"] is True
    assert json.dumps(text)


@pytest.mark.parametrize("closed_f", [True, False])
def test_prop1_small_universe(closed_f):
    spans = list(closed_inclusion_spans(Bounds(2, 2, 2), require_closed_f=closed_f))
    assert spans
    for span in spans:
        rep = check_theorem_prop1(span)
        assert rep.ok
        if closed_f:
            assert rep.pushout_topological and rep.pushout_equals_oracle


# -- finite CW builds --------------------------------------------------------


def test_main_on_closed_build():
    stages = [StageSpec(0, ({}, {})), StageSpec(1, ({"p": "e0.0/a", "q": "e0.1/a"},))]
    rep = check_theorem_main(FiniteClosureSpace([]), stages)
    assert rep.base_topological and rep.ok and not rep.flagged
    assert [s.topological for s in rep.stages] == [True, True]


def test_main_flags_non_closed_stage():
    base, stages = cw_script_from_doc(load_json(FIXTURES / "cw_nonclosed.json"), FIXTURES)
    rep = check_theorem_main(base, stages)
    assert rep.stages[0].attaching_closed and rep.stages[0].hypotheses_met
    assert not rep.stages[1].attaching_closed
    assert rep.flagged == [rep.stages[1]]
    assert rep.ok


def test_main_with_no_stages(z3):
    rep = check_theorem_main(z3, [])
    assert not rep.base_topological and rep.stages == [] and rep.ok


# -- mining ------------------------------------------------------------------


def test_mining_finds_the_interval_counterexample():
    bounds = Bounds(2, 3, 2)
    universe = sum(1 for _ in closed_inclusion_spans(bounds))
    certs = mine_counterexamples(bounds, budget=universe)
    assert certs and all(c.kind == NON_IDEMPOTENT for c in certs)
    target = pseudo_interval()
    hits = []
    for c in certs:
        X = c.span.X
        if len(X) == 3 and len(c.span.A) == 2 and len(c.span.Y) == 2:
            inside = c.span.i.image(c.span.A.points)
            order = sorted(inside) + [x for x in X.points if x not in inside]
            perm = dict(zip(("p", "q", "m"), order))
            if oracles.isomorphic_via(target, X, perm) and not any(
                oracles.closure(c.span.Y, {y}) == {y} for y in c.span.Y.points
            ):
                hits.append(c)
    assert hits
    for c in hits:
        # the witness is the open point of X, seen in the pushout
        res = pushout(c.span)
        apex = next(x for x in c.span.X.points if x not in c.span.i.image(c.span.A.points))
        assert c.witness == {res.g(apex)}


def test_mining_with_closed_f_finds_nothing():
    bounds = Bounds(2, 3, 3)
    universe = sum(1 for _ in closed_inclusion_spans(bounds, require_closed_f=True))
    assert mine_counterexamples(bounds, budget=universe, require_closed_f=True) == []


def test_mining_budget_zero():
    assert mine_counterexamples(budget=0) == []


def test_certificates_replay_and_serialize():
    certs = mine_counterexamples(Bounds(1, 2, 2, 2, 4, 4), budget=600, seed=5)
    assert certs
    for c in certs:
        assert c.replays()
        rec = json.loads(c.to_json())
        assert rec["kind"] == NON_IDEMPOTENT and rec["witness"]


def test_mining_is_deterministic():
    a = mine_counterexamples(Bounds(1, 2, 2, 2, 4, 4), budget=800, seed=11)
    b = mine_counterexamples(Bounds(1, 2, 2, 2, 4, 4), budget=800, seed=11)
    assert [c.to_json() for c in a] == [c.to_json() for c in b]


def test_hypothesis_failure_kind_is_distinct():
    assert HYPOTHESIS_FAILURE != NON_IDEMPOTENT


# -- universal property ------------------------------------------------------


def test_universal_property_indiscrete_pair(indiscrete_pair_span):
    res = pushout(indiscrete_pair_span)
    assert verify_universal_property(res)
    assert universal_property_certificate(res) is None


def test_universal_property_detects_mutation(indiscrete_pair_span):
    res = pushout(indiscrete_pair_span)
    bad = mutate_closure(res, 0, 2)
    assert not verify_universal_property(bad)
    assert universal_property_certificate(bad).kind == "universal-property-failure"


def test_universal_property_detects_wrong_leg(indiscrete_pair_span):
    res = pushout(indiscrete_pair_span)
    wrong = type(res)(res.span, res.Z, res.j, SpaceMap.constant(res.span.X, res.Z, 1), res.provenance)
    assert not verify_universal_property(wrong)


def test_universal_property_of_empty_span():
    E = FiniteClosureSpace([])
    span = Span(E, SpaceMap(E, E, {}), SpaceMap(E, E, {}))
    assert verify_universal_property(pushout(span))


def test_universal_property_rejects_finer_closure(sierpinski):
    # a discrete carrier on the pushout admits too many mediating maps
    pt = FiniteClosureSpace(["*"])
    span = Span(pt, SpaceMap.constant(pt, sierpinski, "b"), SpaceMap.constant(pt, pt, "*"))
    res = pushout(span)
    assert verify_universal_property(res)
    fine = FiniteClosureSpace.discrete(res.Z.points)
    loose = type(res)(
        span, fine, SpaceMap(sierpinski, fine, res.j.assignment), SpaceMap(pt, fine, res.g.assignment), res.provenance
    )
    assert not verify_universal_property(loose)


@pytest.mark.parametrize("seed", range(30))
def test_universal_property_random(seed):
    span = random_span(random.Random(seed), 2, 3, 3)
    assert verify_universal_property(pushout(span), cocone_bound=3)


@pytest.mark.slow
def test_symmetry_reduction_loses_nothing():
    # the labeled universe (no isomorphism reduction) gives the same verdicts
    tops = [s for n in range(4) for s in spaces(n, topological=True)]
    checked = 0
    for X in tops:
        for a_mask in X.closed_masks():
            if bin(a_mask).count("1") > 2:
                continue
            i = inclusion(X, X.subset(a_mask))
            for Y in tops:
                for f in functions(i.domain, Y):
                    if not f.is_continuous():
                        continue
                    rep = check_theorem_prop1(Span(i.domain, f, i))
                    assert rep.ok
                    checked += 1
    assert checked > sum(1 for _ in closed_inclusion_spans(Bounds(2, 3, 3)))
