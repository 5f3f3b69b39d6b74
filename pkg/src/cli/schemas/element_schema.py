from fractions import Fraction
from typing import List

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel

from src.series import Element, Exponent, Series


def rational_text(value: Fraction) -> str:
    """'p/q' 문자열 (정수는 'p')"""
    return str(Fraction(value))


class JsonModel(BaseModel):
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)


class TermSchema(JsonModel):
    exp: List[str] = Field(..., description="지수 성분 (유리수 문자열)")
    coeff: str = Field(..., description="계수 (유리수 문자열)")


class ElementSchema(JsonModel):
    """{"terms": [{"exp": [...], "coeff": "p/q"}]}"""

    terms: List[TermSchema] = Field(default_factory=list)

    @classmethod
    def from_element(cls, element: Series) -> "ElementSchema":
        return cls(
            terms=[
                TermSchema(
                    exp=[rational_text(x) for x in term.exponent.components],
                    coeff=rational_text(term.coeff),
                )
                for term in element.terms
            ]
        )

    def to_element(self, dim: int) -> Element:
        pairs = [
            (Exponent.of(*(Fraction(x) for x in term.exp)), Fraction(term.coeff))
            for term in self.terms
        ]
        return Element.of(Series.from_terms(pairs, dim))
