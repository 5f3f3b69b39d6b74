from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.core.exceptions import DimensionMismatch, InvariantViolation
from src.series.entities.exponent import Exponent, Rational
from src.series.entities.series import Series


@dataclass(frozen=True, eq=False)
class Element(Series):
    """계산 가능한 비표준 모델 M의 원소

    불변식:
        - 모든 지수 >= 0 (사전식), 서로 다름
        - 지수 0의 계수(상수항)는 정수
        - 양의 지수 항이 있으면 선행 계수 > 0, 없으면 음이 아닌 정수 상수
    """

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise DimensionMismatch(f"dimension must be 1 or 2, got {self.dim}")
        previous = None
        for term in self.terms:
            if term.exponent.dim != self.dim:
                raise DimensionMismatch(
                    f"exponent {term.exponent} does not have dimension {self.dim}"
                )
            if term.exponent.sign() < 0:
                raise InvariantViolation(f"negative exponent {term.exponent} is outside M")
            if term.coeff == 0:
                raise InvariantViolation("zero coefficient in canonical form")
            if previous is not None and not term.exponent < previous:
                raise InvariantViolation("terms must be strictly descending")
            previous = term.exponent
        if self.constant_term().denominator != 1:
            raise InvariantViolation(
                f"constant term {self.constant_term()} is not an integer"
            )
        if self.terms and self.terms[0].coeff < 0:
            raise InvariantViolation("element is negative")

    @classmethod
    def of(cls, series: Series) -> "Element":
        if isinstance(series, Element):
            return series
        return cls(series.terms, series.dim)

    @classmethod
    def zero(cls, dim: int) -> "Element":
        return cls((), dim)

    @classmethod
    def constant(cls, value: int, dim: int) -> "Element":
        return cls.of(Series.constant(value, dim))

    @classmethod
    def monomial(cls, coeff: Rational, exponent: Sequence[Rational]) -> "Element":
        """coeff * t^exponent. exponent는 성분 시퀀스"""
        exp = Exponent.of(*exponent)
        return cls.of(Series.monomial(Fraction(coeff), exp))

    def is_standard(self) -> bool:
        degree = self.degree()
        return degree is None or degree.is_zero()

    def positive_part(self) -> "Element":
        """상수항을 뺀 부분. E0-클래스를 결정합니다."""
        return Element.of(super().positive_part())
