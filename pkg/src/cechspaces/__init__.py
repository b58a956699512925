"""Finite Čech closure spaces: closures, maps, colimits, cell attachment."""

from .cells import (
    CellAttachment,
    StageSpec,
    attach_cells,
    build_cw,
    disk_model,
    pseudo_interval,
    sphere_model,
)
from .colimits import (
    PushoutResult,
    Span,
    coequalizer,
    coproduct,
    equalizer,
    product,
    pushout,
    pushout_along_closed_inclusion,
)
from .core import FiniteClosureSpace, validate
from .maps import SpaceMap, closed_inclusion_conditions, inclusion, subspace
from .toporacle import top_pushout_oracle
from .verify import (
    Bounds,
    Certificate,
    check_theorem_main,
    check_theorem_prop1,
    condition_b,
    mine_counterexamples,
    verify_universal_property,
)

__all__ = [
    "Bounds",
    "CellAttachment",
    "Certificate",
    "FiniteClosureSpace",
    "PushoutResult",
    "Span",
    "SpaceMap",
    "StageSpec",
    "attach_cells",
    "build_cw",
    "check_theorem_main",
    "check_theorem_prop1",
    "closed_inclusion_conditions",
    "coequalizer",
    "condition_b",
    "coproduct",
    "disk_model",
    "equalizer",
    "inclusion",
    "mine_counterexamples",
    "product",
    "pseudo_interval",
    "pushout",
    "pushout_along_closed_inclusion",
    "sphere_model",
    "subspace",
    "top_pushout_oracle",
    "validate",
    "verify_universal_property",
]
