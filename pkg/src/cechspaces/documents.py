"""JSON documents for spaces, maps, spans, CW scripts and results.

A space document looks like::

    {"points": [0, 1, 2], "closure": {"0": [0, 1], "1": [1, 2]}}

Labels are JSON ints, strings, or arrays (tuples). Closure keys are the
string form of a label (``labels.render``); points without a closure entry
are closed singletons. Wherever a document expects a space or a map, a string
is read as a path to another document, relative to the referring file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .cells import StageSpec
from .colimits import PushoutResult, Span
from .core import ClosureAxiomError, FiniteClosureSpace, validate
from .labels import from_json, render, sort_labels, to_json
from .maps import MapError, SpaceMap


class DocumentError(ValueError):
    """Raised for documents that do not parse or lack required fields."""


def load_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"{path}: {exc}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _resolve(value: Any, base: Path | None):
    if isinstance(value, str):
        path = Path(value)
        if base is not None and not path.is_absolute():
            path = base / path
        return load_json(path), path.parent
    return value, base


# -- spaces ---------------------------------------------------------------


def _check_keys(points) -> None:
    # closure and assignment keys are rendered labels; 1 and "1" would clash
    keys = [render(p) for p in points]
    if len(set(keys)) != len(keys):
        raise DocumentError("labels with the same string form cannot be written as keys")


def space_to_doc(space: FiniteClosureSpace) -> dict:
    _check_keys(space.points)
    return {
        "points": [to_json(p) for p in space.points],
        "closure": {
            render(p): [to_json(q) for q in sort_labels(space.singleton_closure(p))]
            for p in space.points
        },
    }


def space_from_doc(doc: Any, base: Path | None = None, check: bool = True) -> FiniteClosureSpace:
    """Parse a space document; validation failures raise ``ClosureAxiomError``."""
    doc, _ = _resolve(doc, base)
    if not isinstance(doc, dict) or "points" not in doc:
        raise DocumentError("space document needs a 'points' list")
    try:
        points = [from_json(p) for p in doc["points"]]
    except TypeError as exc:
        raise DocumentError(str(exc)) from None
    by_name = {}
    for p in points:
        if render(p) in by_name:
            raise DocumentError(f"duplicate point {render(p)!r}")
        by_name[render(p)] = p
    raw = doc.get("closure", {})
    if not isinstance(raw, dict):
        raise DocumentError("'closure' must be an object")
    closure = {}
    for key, value in raw.items():
        if not isinstance(value, list):
            raise DocumentError(f"closure of {key!r} must be a list")
        try:
            closure[by_name.get(key, key)] = [from_json(q) for q in value]
        except TypeError as exc:
            raise DocumentError(str(exc)) from None
    space = FiniteClosureSpace(points, closure, check=False)
    if check:
        problems = validate(space)
        if problems:
            raise ClosureAxiomError(problems)
    return space


# -- maps -----------------------------------------------------------------


def assignment_to_doc(f: SpaceMap) -> dict:
    _check_keys(f.domain.points)
    return {render(p): to_json(q) for p, q in f.assignment.items()}


def map_to_doc(f: SpaceMap) -> dict:
    return {
        "domain": space_to_doc(f.domain),
        "codomain": space_to_doc(f.codomain),
        "assignment": assignment_to_doc(f),
    }


def _assignment(doc: Any, domain: FiniteClosureSpace) -> dict:
    if not isinstance(doc, dict):
        raise DocumentError("assignment must be an object")
    names = {render(p): p for p in domain.points}
    out = {}
    for key, value in doc.items():
        if key not in names:
            raise DocumentError(f"assignment mentions unknown point {key!r}")
        out[names[key]] = from_json(value)
    return out


def map_from_doc(
    doc: Any,
    base: Path | None = None,
    domain: FiniteClosureSpace | None = None,
    codomain: FiniteClosureSpace | None = None,
) -> SpaceMap:
    """Parse a map document; ``domain``/``codomain`` fill in missing fields."""
    doc, base = _resolve(doc, base)
    if not isinstance(doc, dict) or "assignment" not in doc:
        raise DocumentError("map document needs an 'assignment'")
    dom = space_from_doc(doc["domain"], base) if "domain" in doc else domain
    cod = space_from_doc(doc["codomain"], base) if "codomain" in doc else codomain
    if dom is None or cod is None:
        raise DocumentError("map document needs 'domain' and 'codomain'")
    if domain is not None and dom != domain:
        raise DocumentError("map domain does not match the diagram")
    if codomain is not None and cod != codomain:
        raise DocumentError("map codomain does not match the diagram")
    try:
        return SpaceMap(dom, cod, _assignment(doc["assignment"], dom))
    except MapError as exc:
        raise DocumentError(str(exc)) from None


# -- spans ----------------------------------------------------------------


def span_to_doc(span: Span) -> dict:
    return {
        "A": space_to_doc(span.A),
        "X": space_to_doc(span.X),
        "Y": space_to_doc(span.Y),
        "f": {"assignment": assignment_to_doc(span.f)},
        "i": {"assignment": assignment_to_doc(span.i)},
    }


def span_from_doc(doc: Any, base: Path | None = None) -> Span:
    doc, base = _resolve(doc, base)
    missing = [k for k in ("A", "X", "Y", "f", "i") if not isinstance(doc, dict) or k not in doc]
    if missing:
        raise DocumentError(f"span document lacks {missing}")
    A = space_from_doc(doc["A"], base)
    X = space_from_doc(doc["X"], base)
    Y = space_from_doc(doc["Y"], base)
    f = map_from_doc(doc["f"], base, A, Y)
    i = map_from_doc(doc["i"], base, A, X)
    return Span(A, f, i)


# -- results --------------------------------------------------------------


def provenance_to_doc(provenance: dict) -> list:
    rows = [
        {"from": [tag, to_json(label)], "to": to_json(new)}
        for (tag, label), new in provenance.items()
    ]
    return sorted(rows, key=lambda r: json.dumps(r, sort_keys=True))


def pushout_to_doc(result: PushoutResult) -> dict:
    doc = space_to_doc(result.Z)
    doc["j"] = assignment_to_doc(result.j)
    doc["g"] = assignment_to_doc(result.g)
    doc["provenance"] = provenance_to_doc(result.provenance)
    return doc


# -- CW scripts -----------------------------------------------------------


def cw_script_from_doc(doc: Any, base: Path | None = None):
    """Parse ``{"base": space, "stages": [...]}`` into ``(base, [StageSpec])``.

    Each stage names ``dim``, optional ``style`` (``cone``/``cylinder``),
    optional ``count``, and ``cells``: one attaching assignment per cell.
    """
    doc, base_dir = _resolve(doc, base)
    if not isinstance(doc, dict) or "base" not in doc:
        raise DocumentError("CW script needs a 'base' space")
    space = space_from_doc(doc["base"], base_dir)
    stages = []
    for n, st in enumerate(doc.get("stages", [])):
        if not isinstance(st, dict) or "dim" not in st:
            raise DocumentError(f"stage {n} needs 'dim'")
        cells = st.get("cells", [])
        if "count" in st and st["count"] != len(cells):
            raise DocumentError(f"stage {n}: count {st['count']} but {len(cells)} cells given")
        parsed = []
        for cell in cells:
            if not isinstance(cell, dict):
                raise DocumentError(f"stage {n}: attaching assignment must be an object")
            parsed.append({k: from_json(v) for k, v in cell.items()})
        stages.append(StageSpec(int(st["dim"]), tuple(parsed), st.get("style", "cone")))
    return space, stages


def cw_script_to_doc(base_space: FiniteClosureSpace, stages) -> dict:
    return {
        "base": space_to_doc(base_space),
        "stages": [
            {
                "dim": st.dim,
                "style": st.style,
                "count": len(st.cells),
                "cells": [{render(k): to_json(v) for k, v in c.items()} for c in st.cells],
            }
            for st in stages
        ],
    }
