from typing import Literal, Optional, Tuple

from pydantic import Field

from src.series import Element, Exponent, Series
from src.shared.schema import BaseSchema


def _bounded_by_multiples(exp: Exponent, scale: Exponent) -> bool:
    """exp < n * scale 인 표준 n이 있는지"""
    if not exp.is_positive():
        return True
    return exp.archimedean_index() >= scale.archimedean_index()


class RepresentativePolicy(BaseSchema):
    """클래스 대표원 규칙

    무한한 대표원 집합을 만들지 않고, 정규 절단 규칙과 유한한 override로
    원소마다 대표원을 계산합니다.

    - e0: 상수항을 버린 양의 지수 부분이 클래스 키
    - powers: scale의 표준 배수로 위가 막히는 지수 항을 모두 버린 머리(head)가 키
      (x E y iff |x - y| < c^n, scale = deg(c))
    """

    rule: Literal["e0", "powers"] = Field(..., description="절단 규칙")
    scale: Optional[Exponent] = Field(None, description="powers 규칙의 deg(c)")
    overrides: Tuple[Element, ...] = Field(default=(), description="자기 자신이 대표원인 원소")

    def key(self, x: Series) -> Series:
        series = x.to_series()
        if self.rule == "e0":
            return series.positive_part()
        return series.select(lambda exp: not _bounded_by_multiples(exp, self.scale))

    def rep_of_key(self, key: Series) -> Element:
        for anchor in self.overrides:
            if self.key(anchor) == key:
                return anchor
        return Element.of(key)

    def rep(self, x: Element) -> Element:
        return self.rep_of_key(self.key(x))
