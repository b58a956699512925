"""Point labels: a fixed total order and collision-free naming of glued points."""

from __future__ import annotations

import json
from typing import Any, Hashable, Iterable, Mapping, Sequence

Label = Hashable


def label_key(label: Label) -> tuple:
    """Sort key giving a total order on ints, strings and tuples of those.

    Integers come first, then strings, then tuples (compared entrywise).
    """
    if isinstance(label, bool):
        raise TypeError(f"booleans are not valid point labels: {label!r}")
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, tuple):
        return (2, tuple(label_key(x) for x in label))
    raise TypeError(f"unsupported point label {label!r}")


def sort_labels(labels: Iterable[Label]) -> list:
    return sorted(labels, key=label_key)


def render(label: Label) -> str:
    """String form of a label, used as the key in serialized closure maps."""
    if isinstance(label, str):
        return label
    return json.dumps(to_json(label))


def to_json(label: Label) -> Any:
    if isinstance(label, tuple):
        return [to_json(x) for x in label]
    return label


def from_json(value: Any) -> Label:
    if isinstance(value, list):
        return tuple(from_json(x) for x in value)
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"unsupported point label {value!r}")
    return value


def canonical_names(
    classes: Sequence[Sequence[tuple[Any, Label]]],
    tag_order: Mapping[Any, int],
) -> list:
    """Name each class of tagged points by its least member.

    Members are ``(tag, label)`` pairs ordered by ``(tag_order[tag], label_key(label))``.
    When two classes would receive the same label, every class but the first
    (in that order) is renamed to ``"<tag>:<label>"``.
    """

    def member_key(member):
        tag, label = member
        return (tag_order[tag], label_key(label))

    reps = [min(cls, key=member_key) for cls in classes]
    order = sorted(range(len(classes)), key=lambda k: member_key(reps[k]))
    names: list = [None] * len(classes)
    taken: set = set()
    for k in order:
        tag, label = reps[k]
        name = label
        if name in taken:
            name = f"{tag}:{render(label)}"
            while name in taken:
                name += "'"
        taken.add(name)
        names[k] = name
    return names
