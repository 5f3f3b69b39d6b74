"""시드 고정 원소 샘플러

같은 프로필(같은 seed)이면 항상 같은 원소열을 만듭니다.
related_* 함수는 주어진 원소와 특정 단계에서 가까운 원소를 만들어
성질 검사가 양성 판정 쪽도 고르게 다루도록 합니다.
"""

import random
from fractions import Fraction
from typing import Dict, List, Union

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel

from src.series import Element, Exponent, Series, add, mul, scalar_mul


class SampleProfile(BaseModel):
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, frozen=True)

    max_terms: int = Field(3, ge=1, description="양의 지수 항의 최대 개수 (상수항 제외)")
    exponent_bound: int = Field(3, ge=1, description="지수 성분 절댓값 상한")
    denominator_bound: int = Field(2, ge=1, description="지수 분모 상한")
    coeff_bound: int = Field(5, ge=1, description="계수 분자/분모 및 상수항 절댓값 상한")
    dim: int = Field(1, ge=1, le=2)
    seed: Union[int, str] = Field(7, description="시드")
    nonstandard_ratio: float = Field(1.0, ge=0.0, le=1.0, description="비표준 원소 비율")


class ElementSampler:
    """profile.seed로 초기화한 random.Random 하나에서 원소를 뽑습니다"""

    def __init__(self, profile: SampleProfile):
        self.profile = profile
        self.rng = random.Random(profile.seed)

    @property
    def dim(self) -> int:
        return self.profile.dim

    def _rational(self, bound: int, positive: bool = False) -> Fraction:
        den = self.rng.randint(1, self.profile.denominator_bound)
        low = 1 if positive else -bound * den
        return Fraction(self.rng.randint(low, bound * den), den)

    def exponent(self, leading: bool = False) -> Exponent:
        """양의 지수. leading이면 d=2에서 첫 성분도 양수 (가장 큰 아르키메데스 클래스)"""
        bound = self.profile.exponent_bound
        if self.dim == 1:
            return Exponent.of(self._rational(bound, positive=True))
        first = abs(self._rational(bound, positive=leading))
        second = self._rational(bound)
        if first == 0 and second <= 0:
            second = -second if second < 0 else Fraction(1)
        return Exponent.of(first, second)

    def _coeff(self, positive: bool = False) -> Fraction:
        bound = self.profile.coeff_bound
        num = self.rng.randint(1, bound)
        if not positive and self.rng.random() < 0.3:
            num = -num
        return Fraction(num, self.rng.randint(1, bound))

    def standard(self) -> Element:
        return Element.constant(self.rng.randint(0, self.profile.coeff_bound), self.dim)

    def nonstandard(self, leading: bool = False) -> Element:
        count = self.rng.randint(1, self.profile.max_terms)
        if leading:
            drawn = {self.exponent(leading=True)} | {self.exponent() for _ in range(count - 1)}
        else:
            drawn = {self.exponent() for _ in range(count)}
        exps = sorted(drawn, reverse=True)
        mapping: Dict[Exponent, Fraction] = {}
        for index, exp in enumerate(exps):
            mapping[exp] = self._coeff(positive=index == 0)
        bound = self.profile.coeff_bound
        mapping[Exponent.zero(self.dim)] = Fraction(self.rng.randint(-bound, bound))
        return Element.of(Series.from_mapping(mapping, self.dim))

    def element(self) -> Element:
        if self.rng.random() < self.profile.nonstandard_ratio:
            return self.nonstandard()
        return self.standard()

    def small_int(self, low: int = 1, high: int = 9) -> int:
        return self.rng.randint(low, high)

    # --- 주어진 원소 주변 ---

    def lower_terms(self, below: Exponent) -> Series:
        """차수가 below보다 작은 양의 지수 항들 (없을 수 있음)"""
        mapping: Dict[Exponent, Fraction] = {}
        for _ in range(self.rng.randint(0, 2)):
            exp = self.exponent()
            if exp < below:
                mapping[exp] = self._coeff()
        return Series.from_mapping(mapping, self.dim)

    def related(self, a: Element) -> Element:
        """a와 여러 단계에서 가까운 원소 (E0 ~ E4 중 임의)"""
        kind = self.rng.randint(0, 5)
        one_shift = Series.constant(self.rng.randint(-5, 5), self.dim)
        if kind == 0:
            return _floor_at_zero(a.to_series() + one_shift, a)
        if kind == 1:
            return _floor_at_zero(a.to_series() + self.lower_terms(a.degree()), a)
        if kind == 2:
            return scalar_mul(a, self.small_int(1, 4))
        if kind == 3 and self.dim == 2:
            c = Element.monomial(1, (0, self.small_int(1, 3)))
            return mul(a, c)
        if kind == 4:
            return mul(a, a)
        return self.nonstandard()

    def related_chain(self, a: Element, length: int) -> List[Element]:
        chain = [a]
        for _ in range(length - 1):
            chain.append(self.related(chain[-1]))
        return chain

    def e2_mate(self, a: Element) -> Element:
        """a와 E2 관계인 비표준 원소"""
        scaled = a.to_series().scale(Fraction(self.small_int(1, 4), self.small_int(1, 3)))
        mate = scaled + self.lower_terms(a.degree())
        mate = mate - Series.constant(mate.constant_term(), self.dim)
        mate = mate + Series.constant(self.rng.randint(-5, 5), self.dim)
        return Element.of(mate)

    def e3_mate(self, a: Element) -> Element:
        """a와 E3 관계인 비표준 원소

        d=2에서 deg(a)의 첫 성분이 양수이면 t^(0,s)를 곱해 E2 밖으로 보냅니다.
        첫 성분이 0이면 E3-클래스가 E2-클래스와 같으므로 E2 짝을 그대로 씁니다.
        """
        mate = self.e2_mate(a)
        if self.dim == 1 or a.degree().components[0] == 0:
            return mate
        return mul(mate, Element.monomial(1, (0, self.small_int(1, 3))))


def _floor_at_zero(series: Series, fallback: Element) -> Element:
    """상수 조정 결과가 표준 음수이면 fallback + 1"""
    if series.signum() < 0:
        return add(fallback, Element.constant(1, fallback.dim))
    return Element.of(series)


def sample(profile: SampleProfile) -> Element:
    """profile.seed에 대해 결정적인 원소 하나"""
    return ElementSampler(profile).element()
