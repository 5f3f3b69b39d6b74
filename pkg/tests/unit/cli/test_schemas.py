"""JSON 스키마 단위 테스트"""

from src.automorph import anchor_probes, apply, build_from_e2, build_from_e3
from src.cli.schemas import (
    ElementSchema,
    VerdictSchema,
)
from src.cli.schemas.descriptor_schema import descriptor_document, read_descriptor_document
from src.equivalence import EquivLevel, decide


def test_element_schema(el):
    # When
    schema = ElementSchema.from_element(el("t^2 + 1/2*t + 3"))

    # Then
    assert schema.model_dump() == {
        "terms": [
            {"exp": ["2"], "coeff": "1"},
            {"exp": ["1"], "coeff": "1/2"},
            {"exp": ["0"], "coeff": "3"},
        ]
    }
    assert schema.to_element(1) == el("t^2 + 1/2*t + 3")


def test_verdict_schema_uses_camel_case(el, d1):
    # When
    verdict = decide(EquivLevel.E0, el("t^2 + 3"), el("t^2"), d1)
    dumped = VerdictSchema.from_verdict(verdict).model_dump(by_alias=True)

    # Then
    assert dumped["level"] == 0
    assert dumped["equivalent"] is True
    assert dumped["witness"] == {"kind": "bound_n", "n": 4}
    assert dumped["reason"]["degA"] == "2"


def test_descriptor_document_round_trip(el, el2, d1, d2):
    # Given
    cases = [
        (build_from_e2(el("t"), el("2*t + 1"), d1), 1, [el("t"), el("2*t + 1")]),
        (build_from_e2(el("t"), el("2*t"), d1), 1, [el("t"), el("2*t")]),
        (build_from_e3(el2("t^(1,0) + 3"), el2("2*t^(1,2) + 1"), d2), 2,
         [el2("t^(1,0) + 3"), el2("2*t^(1,2) + 1")]),
    ]

    for descriptor, dim, anchors in cases:
        # When
        text = descriptor_document(descriptor, dim).model_dump_json(by_alias=True)
        loaded, loaded_dim = read_descriptor_document(text)

        # Then
        assert loaded_dim == dim
        for x in anchor_probes(anchors):
            assert apply(loaded, x) == apply(descriptor, x)
