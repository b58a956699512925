"""Command line interface: ``cechspaces VERB [inputs] [options]``.

Exit codes: 0 success, 2 usage, 3 unparseable input, 4 axiom/map
validation failure, 5 unmet hypothesis, 6 failed check. On failure one JSON
line ``{"error": ..., "reason": ...}`` goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import documents as docs
from .cells import AttachmentError, CellAttachment, attach_cells, build_cw, make_cell
from .colimits import (
    NotClosedInclusionError,
    SpanError,
    coequalizer,
    coproduct,
    product,
    pushout,
    pushout_along_closed_inclusion,
)
from .core import ClosureAxiomError, ForeignPointError, validate
from .labels import from_json, sort_labels, to_json
from .maps import MapError, subspace
from .toporacle import NotTopologicalError, top_pushout_oracle
from .verify import Bounds, check_theorem_main, check_theorem_prop1, mine_counterexamples, verify_universal_property

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_HYPOTHESIS = 5
EXIT_CHECK = 6


class CommandFailure(Exception):
    def __init__(self, code: int, kind: str, reason: str):
        super().__init__(reason)
        self.code, self.kind, self.reason = code, kind, reason


def _space(path):
    return docs.space_from_doc(str(Path(path).resolve()))


def _span(path):
    return docs.span_from_doc(str(Path(path).resolve()))


def _subset(text: str):
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise docs.DocumentError(f"--set: {exc}") from None
    if not isinstance(value, list):
        raise docs.DocumentError("--set must be a JSON list of labels")
    return [from_json(v) for v in value]


def _labels(subset) -> list:
    return [to_json(p) for p in sort_labels(subset)]


# -- verbs ----------------------------------------------------------------


def cmd_validate(args):
    space = docs.space_from_doc(str(Path(args.space).resolve()), check=False)
    problems = validate(space)
    if problems:
        raise CommandFailure(EXIT_INVALID, "validation", "; ".join(map(str, problems)))
    return {"valid": True, "points": len(space)}


def cmd_closure(args):
    space = _space(args.space)
    return {"closure": _labels(space.closure(_subset(args.set)))}


def cmd_tau(args):
    return docs.space_to_doc(_space(args.space).topological_modification())


def cmd_is_topological(args):
    return {"topological": _space(args.space).is_topological()}


def cmd_subspace(args):
    return docs.space_to_doc(subspace(_space(args.space), _subset(args.set)))


def cmd_coproduct(args):
    res = coproduct([_space(p) for p in args.spaces])
    doc = docs.space_to_doc(res.space)
    doc["provenance"] = docs.provenance_to_doc(res.provenance)
    return doc


def cmd_coequalizer(args):
    f = docs.map_from_doc(str(Path(args.f).resolve()))
    g = docs.map_from_doc(str(Path(args.g).resolve()))
    res = coequalizer(f, g)
    doc = docs.space_to_doc(res.space)
    doc["provenance"] = docs.provenance_to_doc({("Y", y): q for y, q in res.projection.assignment.items()})
    return doc


def cmd_product(args):
    res = product(_space(args.first), _space(args.second))
    return docs.space_to_doc(res.space)


def cmd_pushout(args):
    span = _span(args.span)
    if args.closed_inclusion:
        try:
            return docs.pushout_to_doc(pushout_along_closed_inclusion(span))
        except NotClosedInclusionError as exc:
            raise CommandFailure(EXIT_HYPOTHESIS, "hypothesis", str(exc)) from None
    return docs.pushout_to_doc(pushout(span))


def cmd_top_pushout(args):
    try:
        return docs.space_to_doc(top_pushout_oracle(_span(args.span)))
    except NotTopologicalError as exc:
        raise CommandFailure(EXIT_HYPOTHESIS, "hypothesis", str(exc)) from None


def cmd_attach(args):
    raw = docs.load_json(args.attachment)
    if not isinstance(raw, dict) or "base" not in raw or "dim" not in raw:
        raise docs.DocumentError("attachment needs 'base', 'dim' and 'cells'")
    script = {"base": raw["base"], "stages": [{k: v for k, v in raw.items() if k != "base"}]}
    base, (stage,) = docs.cw_script_from_doc(script, Path(args.attachment).resolve().parent)
    cells = tuple(make_cell(stage.dim, a, base, stage.style) for a in stage.cells)
    res = attach_cells(CellAttachment(base, cells))
    doc = docs.space_to_doc(res.space)
    doc["j"] = docs.assignment_to_doc(res.j)
    doc["Phi"] = docs.assignment_to_doc(res.Phi)
    return doc


def cmd_build_cw(args):
    base, stages = docs.cw_script_from_doc(str(Path(args.script).resolve()))
    cw = build_cw(base, stages)
    doc = docs.space_to_doc(cw.top)
    doc["stages"] = [docs.space_to_doc(s) for s in cw.spaces()]
    return doc


def cmd_check_prop1(args):
    rep = check_theorem_prop1(_span(args.span))
    doc = {"ok": rep.ok, "report": rep.narrative()}
    if rep.witness is not None:
        doc["witness"] = _labels(rep.witness)
    if not rep.hypotheses_met:
        unmet = [k for k, v in rep.hypotheses.items() if not v]
        raise CommandFailure(EXIT_HYPOTHESIS, "hypothesis", f"unmet: {', '.join(unmet)}")
    if not rep.ok:
        raise CommandFailure(EXIT_CHECK, "check", json.dumps(doc, sort_keys=True))
    return doc


def cmd_check_main(args):
    base, stages = docs.cw_script_from_doc(str(Path(args.script).resolve()))
    rep = check_theorem_main(base, stages)
    doc = {
        "ok": rep.ok,
        "base_topological": rep.base_topological,
        "stages": [s._asdict() for s in rep.stages],
    }
    if not rep.ok:
        raise CommandFailure(EXIT_CHECK, "check", f"stage {rep.first_failure.stage} is not topological")
    return doc


def cmd_check_universal(args):
    res = pushout(_span(args.span))
    ok = verify_universal_property(res, args.cocone_bound)
    if not ok:
        raise CommandFailure(EXIT_CHECK, "check", "universal property fails")
    return {"universal": True, "cocone_bound": args.cocone_bound}


def cmd_mine(args):
    certs = mine_counterexamples(args.bounds, args.budget, args.seed, args.closed_f_only)
    lines = [c.to_json() for c in certs]
    broken = [
        c for c in certs
        if c.narrative.get("f closed implies agreement") is False
        or c.narrative.get("agreement and condition B imply f closed") is False
        or c.narrative.get("tau(pushout) equals Top pushout") is False
    ]
    text = "".join(line + "\n" for line in lines)
    if broken:
        _emit(text, args.out)
        raise CommandFailure(EXIT_CHECK, "check", broken[0].to_json())
    return text


# -- plumbing -------------------------------------------------------------


def _bounds(text: str) -> Bounds:
    try:
        parts = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("bounds are integers A,X,Y[,RA,RX,RY]") from None
    if len(parts) not in (3, 6):
        raise argparse.ArgumentTypeError("bounds are A,X,Y or A,X,Y,RA,RX,RY")
    return Bounds(*parts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cechspaces", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write the result here instead of stdout")
        return p

    verb("validate", cmd_validate, "check a space document against the closure axioms").add_argument("space")
    p = verb("closure", cmd_closure, "closure of a subset")
    p.add_argument("space")
    p.add_argument("--set", required=True, help="JSON list of labels")
    verb("tau", cmd_tau, "topological modification").add_argument("space")
    verb("is-topological", cmd_is_topological, "whether the closure is idempotent").add_argument("space")
    p = verb("subspace", cmd_subspace, "subspace closure on a subset")
    p.add_argument("space")
    p.add_argument("--set", required=True, help="JSON list of labels")
    verb("coproduct", cmd_coproduct, "disjoint union").add_argument("spaces", nargs="*")
    p = verb("coequalizer", cmd_coequalizer, "coequalizer of two map documents")
    p.add_argument("f")
    p.add_argument("g")
    p = verb("product", cmd_product, "binary product")
    p.add_argument("first")
    p.add_argument("second")
    p = verb("pushout", cmd_pushout, "pushout in closure spaces")
    p.add_argument("span")
    p.add_argument("--closed-inclusion", action="store_true", help="use the Y ⊔ (X∖A) construction")
    verb("top-pushout", cmd_top_pushout, "pushout in topological spaces").add_argument("span")
    verb("attach", cmd_attach, "attach one stage of cells").add_argument("attachment")
    verb("build-cw", cmd_build_cw, "run a CW build script").add_argument("script")
    verb("check-prop1", cmd_check_prop1, "check the closed-map criterion on a span").add_argument("span")
    verb("check-main", cmd_check_main, "check a CW build with closed attaching maps").add_argument("script")
    p = verb("check-universal", cmd_check_universal, "brute-force the universal property")
    p.add_argument("span")
    p.add_argument("--cocone-bound", type=int, default=4)
    p = verb("mine", cmd_mine, "search small spans for non-topological pushouts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bounds", type=_bounds, default=Bounds(), help="A,X,Y[,RA,RX,RY] sizes")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--closed-f-only", action="store_true")
    return parser


def _emit(result, out):
    text = result if isinstance(result, str) else docs.dumps(result) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fail(code: int, kind: str, reason: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "reason": reason}) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except CommandFailure as exc:
        return _fail(exc.code, exc.kind, exc.reason)
    except docs.DocumentError as exc:
        return _fail(EXIT_PARSE, "parse", str(exc))
    except (ClosureAxiomError, ForeignPointError, MapError, SpanError, AttachmentError) as exc:
        return _fail(EXIT_INVALID, "validation", str(exc))
    except ValueError as exc:
        return _fail(EXIT_INVALID, "validation", str(exc))
    _emit(result, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
