from .representatives import RepresentativePolicy
from .descriptor import (
    AnchorPair,
    Compose,
    Descriptor,
    E0ClassShift,
    E2Affine,
    E3Shift,
    Identity,
    Inverse,
    SegmentExtension,
)

__all__ = [
    "AnchorPair",
    "Compose",
    "Descriptor",
    "E0ClassShift",
    "E2Affine",
    "E3Shift",
    "Identity",
    "Inverse",
    "RepresentativePolicy",
    "SegmentExtension",
]
