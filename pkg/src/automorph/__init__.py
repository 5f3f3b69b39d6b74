"""automorph 패키지

E2 / E3 쌍에서 만드는 순서 자기동형사상의 기술자, 평가, 검증.
"""

from src.automorph.builders import (
    build_from_e2,
    build_from_e3,
    e5_closure_under_sum,
    extend_initial_segment,
)
from src.automorph.entities import (
    Compose,
    Descriptor,
    E0ClassShift,
    E2Affine,
    E3Shift,
    Identity,
    Inverse,
    RepresentativePolicy,
    SegmentExtension,
)
from src.automorph.evaluation import apply, apply_inverse, compose, invert
from src.automorph.validation import (
    AlmostAddReport,
    ValidationReport,
    almost_add_defect,
    almost_add_report,
    anchor_probes,
    validate,
)

__all__ = [
    "AlmostAddReport",
    "Compose",
    "Descriptor",
    "E0ClassShift",
    "E2Affine",
    "E3Shift",
    "Identity",
    "Inverse",
    "RepresentativePolicy",
    "SegmentExtension",
    "ValidationReport",
    "almost_add_defect",
    "almost_add_report",
    "anchor_probes",
    "apply",
    "apply_inverse",
    "build_from_e2",
    "build_from_e3",
    "compose",
    "e5_closure_under_sum",
    "extend_initial_segment",
    "invert",
    "validate",
]
