"""순서 자기동형사상(order-automorphism) 기술자

기술자는 유한하고 변경 불가능한 값이며, 어느 원소에서든 평가할 수 있고
역사상도 기술자로 표현됩니다. 실제 평가는 automorph.evaluation에 있습니다.
"""

from typing import List, Literal, Tuple, Union

from pydantic import Field, model_validator

from src.automorph.entities.representatives import RepresentativePolicy
from src.series import Element, Series, mul
from src.shared.schema import BaseSchema

AnchorPair = Tuple[Element, Element]


class Identity(BaseSchema):
    kind: Literal["identity"] = "identity"

    def anchor_pairs(self) -> List[AnchorPair]:
        return []


class E2Affine(BaseSchema):
    """E2 쌍 (a, b)의 자기동형사상

    E0-클래스 단위로 c의 클래스 이하에서는 항등, 위에서는
    rep -> n(rep - c) + c + m, 클래스 안의 오프셋은 보존합니다.
    m은 (b - a)를 (n - 1)로 나눈 나머지이며 정확히 나누어지면 0입니다.
    """

    kind: Literal["e2_affine"] = "e2_affine"
    a: Element
    b: Element
    n: int = Field(..., ge=2, description="b < n*a 인 최소 n")
    c: Element = Field(..., description="항등 구간의 경계")
    m: int = Field(0, ge=0, description="나눗셈 나머지 보정")
    path: Literal["exact", "k7"] = Field("exact", description="c를 구한 방법")

    def policy(self) -> RepresentativePolicy:
        overrides = (self.a,) if self.c.is_standard() else (self.a, self.c)
        return RepresentativePolicy(rule="e0", overrides=overrides)

    def anchor_pairs(self) -> List[AnchorPair]:
        return [(self.a, self.b)]


class E3Shift(BaseSchema):
    """정규화된 E3 쌍 (a1, a2 = c*a1)의 자기동형사상

    0의 클래스에서는 항등, 다른 클래스의 대표원은 c배, 오프셋은 보존합니다.
    c는 t^(0,s) 꼴의 단항식입니다.
    """

    kind: Literal["e3_shift"] = "e3_shift"
    a1: Element
    a2: Element
    c: Element

    @model_validator(mode="after")
    def _check_shape(self) -> "E3Shift":
        exp = self.c.degree()
        if self.c.dim != 2 or len(self.c.terms) != 1 or exp.components[0] != 0:
            raise ValueError("e3 shift needs a monomial c = t^(0,s)")
        if exp.components[1] <= 0:
            raise ValueError("e3 shift needs a nonstandard c")
        if mul(self.c, self.a1) != self.a2:
            raise ValueError("e3 shift needs a2 = c * a1")
        return self

    def policy(self) -> RepresentativePolicy:
        return RepresentativePolicy(
            rule="powers", scale=self.c.degree(), overrides=(self.a1, self.a2)
        )

    def anchor_pairs(self) -> List[AnchorPair]:
        return [(self.a1, self.a2)]


class E0ClassShift(BaseSchema):
    """anchor의 E0-클래스 안에서만 offset만큼 이동"""

    kind: Literal["e0_class_shift"] = "e0_class_shift"
    anchor: Element
    offset: int

    @model_validator(mode="after")
    def _check_anchor(self) -> "E0ClassShift":
        if self.anchor.is_standard():
            raise ValueError("class shift anchor must be nonstandard")
        return self

    def anchor_pairs(self) -> List[AnchorPair]:
        shifted = self.anchor.to_series() + Series.constant(self.offset, self.anchor.dim)
        return [(self.anchor, Element.of(shifted))]


class Compose(BaseSchema):
    """parts를 오른쪽에서 왼쪽으로 적용"""

    kind: Literal["compose"] = "compose"
    parts: Tuple["Descriptor", ...]
    pinned: Tuple[AnchorPair, ...] = Field(default=(), description="검증할 (원소, 상) 쌍")

    def anchor_pairs(self) -> List[AnchorPair]:
        return list(self.pinned)


class Inverse(BaseSchema):
    kind: Literal["inverse"] = "inverse"
    inner: "Descriptor"

    def anchor_pairs(self) -> List[AnchorPair]:
        return [(y, x) for x, y in self.inner.anchor_pairs()]


class SegmentExtension(BaseSchema):
    """x < a 이면 below(x), 아니면 b + above(x - a)

    above가 항등이면 초기 구간 동형사상의 확장이고, 다른 자기동형사상이면
    합에 대한 닫힘 구성(g(a1 + a2) = b1 + f2(a2))입니다.
    """

    kind: Literal["segment_extension"] = "segment_extension"
    below: "Descriptor"
    a: Element
    b: Element
    above: "Descriptor" = Field(default_factory=Identity)

    def anchor_pairs(self) -> List[AnchorPair]:
        return [(self.a, self.b)]


Descriptor = Union[
    Identity, E2Affine, E3Shift, E0ClassShift, Compose, Inverse, SegmentExtension
]

for _model in (Compose, Inverse, SegmentExtension):
    _model.model_rebuild()
