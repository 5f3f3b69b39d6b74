"""기술자 JSON: kind로 구분되는 재귀 union

dump_descriptor / load_descriptor는 서로 역이며 `apply --desc <file>`이
파일에서 기술자를 다시 읽을 때 사용합니다.
"""

from typing import Annotated, List, Literal, Tuple, Union

from pydantic import Field

from src.automorph import (
    Compose,
    Descriptor,
    E0ClassShift,
    E2Affine,
    E3Shift,
    Identity,
    Inverse,
    SegmentExtension,
)
from src.cli.schemas.element_schema import ElementSchema, JsonModel


class IdentitySchema(JsonModel):
    kind: Literal["identity"] = "identity"


class E2AffineSchema(JsonModel):
    kind: Literal["e2_affine"] = "e2_affine"
    a: ElementSchema
    b: ElementSchema
    n: int
    c: ElementSchema
    m: int = 0
    path: Literal["exact", "k7"] = "exact"


class E3ShiftSchema(JsonModel):
    kind: Literal["e3_shift"] = "e3_shift"
    a1: ElementSchema
    a2: ElementSchema
    c: ElementSchema


class E0ClassShiftSchema(JsonModel):
    kind: Literal["e0_class_shift"] = "e0_class_shift"
    anchor: ElementSchema
    offset: int


class ComposeSchema(JsonModel):
    kind: Literal["compose"] = "compose"
    parts: List["DescriptorSchema"]
    pinned: List[List[ElementSchema]] = Field(default_factory=list)


class InverseSchema(JsonModel):
    kind: Literal["inverse"] = "inverse"
    inner: "DescriptorSchema"


class SegmentExtensionSchema(JsonModel):
    kind: Literal["segment_extension"] = "segment_extension"
    below: "DescriptorSchema"
    a: ElementSchema
    b: ElementSchema
    above: "DescriptorSchema"


DescriptorSchema = Annotated[
    Union[
        IdentitySchema,
        E2AffineSchema,
        E3ShiftSchema,
        E0ClassShiftSchema,
        ComposeSchema,
        InverseSchema,
        SegmentExtensionSchema,
    ],
    Field(discriminator="kind"),
]

for _model in (ComposeSchema, InverseSchema, SegmentExtensionSchema):
    _model.model_rebuild()


class DescriptorDocument(JsonModel):
    """파일로 저장되는 기술자 (차원 포함)"""

    dim: int
    descriptor: DescriptorSchema


def _el(element) -> ElementSchema:
    return ElementSchema.from_element(element)


def dump_descriptor(d: Descriptor):
    if isinstance(d, Identity):
        return IdentitySchema()
    if isinstance(d, E2Affine):
        return E2AffineSchema(a=_el(d.a), b=_el(d.b), n=d.n, c=_el(d.c), m=d.m, path=d.path)
    if isinstance(d, E3Shift):
        return E3ShiftSchema(a1=_el(d.a1), a2=_el(d.a2), c=_el(d.c))
    if isinstance(d, E0ClassShift):
        return E0ClassShiftSchema(anchor=_el(d.anchor), offset=d.offset)
    if isinstance(d, Compose):
        return ComposeSchema(
            parts=[dump_descriptor(p) for p in d.parts],
            pinned=[[_el(x), _el(y)] for x, y in d.pinned],
        )
    if isinstance(d, Inverse):
        return InverseSchema(inner=dump_descriptor(d.inner))
    if isinstance(d, SegmentExtension):
        return SegmentExtensionSchema(
            below=dump_descriptor(d.below),
            a=_el(d.a),
            b=_el(d.b),
            above=dump_descriptor(d.above),
        )
    raise TypeError(f"unknown descriptor kind: {type(d).__name__}")


def load_descriptor(schema, dim: int) -> Descriptor:
    if isinstance(schema, IdentitySchema):
        return Identity()
    if isinstance(schema, E2AffineSchema):
        return E2Affine(
            a=schema.a.to_element(dim),
            b=schema.b.to_element(dim),
            n=schema.n,
            c=schema.c.to_element(dim),
            m=schema.m,
            path=schema.path,
        )
    if isinstance(schema, E3ShiftSchema):
        return E3Shift(
            a1=schema.a1.to_element(dim),
            a2=schema.a2.to_element(dim),
            c=schema.c.to_element(dim),
        )
    if isinstance(schema, E0ClassShiftSchema):
        return E0ClassShift(anchor=schema.anchor.to_element(dim), offset=schema.offset)
    if isinstance(schema, ComposeSchema):
        return Compose(
            parts=tuple(load_descriptor(p, dim) for p in schema.parts),
            pinned=tuple((x.to_element(dim), y.to_element(dim)) for x, y in schema.pinned),
        )
    if isinstance(schema, InverseSchema):
        return Inverse(inner=load_descriptor(schema.inner, dim))
    if isinstance(schema, SegmentExtensionSchema):
        return SegmentExtension(
            below=load_descriptor(schema.below, dim),
            a=schema.a.to_element(dim),
            b=schema.b.to_element(dim),
            above=load_descriptor(schema.above, dim),
        )
    raise TypeError(f"unknown descriptor schema: {type(schema).__name__}")


def descriptor_document(d: Descriptor, dim: int) -> DescriptorDocument:
    return DescriptorDocument(dim=dim, descriptor=dump_descriptor(d))


def read_descriptor_document(text: str) -> Tuple[Descriptor, int]:
    """파일 내용을 (기술자, 차원)으로 읽습니다"""
    document = DescriptorDocument.model_validate_json(text)
    return load_descriptor(document.descriptor, document.dim), document.dim
