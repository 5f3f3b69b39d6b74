"""유한 일반화 멱급수 체(field)의 원소

Series는 부호, 지수 범위에 제약이 없는 유한합 sum c_e t^e 입니다.
나눗셈의 나머지나 두 원소의 부호 있는 차이처럼 모델 M 밖으로
나갈 수 있는 중간값을 담습니다. 모델의 원소는 Element(Series)입니다.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Dict, Iterable, Optional, Tuple

from pydantic_core import core_schema

from src.series.entities.exponent import Exponent, Rational


@dataclass(frozen=True)
class Term:
    exponent: Exponent
    coeff: Fraction


@dataclass(frozen=True, eq=False)
class Series:
    """내림차순으로 정렬되고 0 계수가 제거된 정규형 유한 급수

    Attributes:
        terms: 지수 내림차순 Term 튜플
        dim: 지수 차원 (1 또는 2)
    """

    terms: Tuple[Term, ...]
    dim: int

    # --- 생성 ---

    @classmethod
    def from_mapping(cls, mapping: Dict[Exponent, Fraction], dim: int) -> "Series":
        ordered = sorted(mapping.items(), key=lambda item: item[0], reverse=True)
        return cls(
            tuple(Term(exp, Fraction(coeff)) for exp, coeff in ordered if coeff != 0),
            dim,
        )

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[Exponent, Rational]], dim: int) -> "Series":
        mapping: Dict[Exponent, Fraction] = {}
        for exp, coeff in pairs:
            if exp.dim != dim:
                raise ValueError(f"exponent {exp} does not have dimension {dim}")
            mapping[exp] = mapping.get(exp, Fraction(0)) + Fraction(coeff)
        return cls.from_mapping(mapping, dim)

    @classmethod
    def zero(cls, dim: int) -> "Series":
        return cls((), dim)

    @classmethod
    def constant(cls, value: Rational, dim: int) -> "Series":
        return cls.from_mapping({Exponent.zero(dim): Fraction(value)}, dim)

    @classmethod
    def monomial(cls, coeff: Rational, exponent: Exponent) -> "Series":
        return cls.from_mapping({exponent: Fraction(coeff)}, exponent.dim)

    @classmethod
    def __get_pydantic_core_schema__(cls, source, handler):
        # pydantic 모델 필드에서는 인스턴스 검사만 하고, JSON으로는 문자열 표기를 씁니다
        return core_schema.is_instance_schema(
            cls,
            serialization=core_schema.plain_serializer_function_ser_schema(str, when_used="json"),
        )

    def as_mapping(self) -> Dict[Exponent, Fraction]:
        return {term.exponent: term.coeff for term in self.terms}

    def to_series(self) -> "Series":
        """하위 클래스(Element)의 불변식 검사 없이 다루기 위한 일반 Series 사본"""
        return Series(self.terms, self.dim)

    # --- 조회 ---

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def leading(self) -> Optional[Term]:
        return self.terms[0] if self.terms else None

    def degree(self) -> Optional[Exponent]:
        return self.terms[0].exponent if self.terms else None

    def signum(self) -> int:
        if not self.terms:
            return 0
        return 1 if self.terms[0].coeff > 0 else -1

    def constant_term(self) -> Fraction:
        for term in self.terms:
            if term.exponent.is_zero():
                return term.coeff
        return Fraction(0)

    def coefficient(self, exponent: Exponent) -> Fraction:
        for term in self.terms:
            if term.exponent == exponent:
                return term.coeff
        return Fraction(0)

    def select(self, predicate) -> "Series":
        """predicate(exponent)가 참인 항만 남긴 급수"""
        return Series(tuple(t for t in self.terms if predicate(t.exponent)), self.dim)

    def positive_part(self) -> "Series":
        return self.select(lambda exp: exp.is_positive())

    # --- 체 연산 ---

    def _check(self, other: "Series") -> None:
        if self.dim != other.dim:
            from src.core.exceptions import DimensionMismatch

            raise DimensionMismatch(f"dimension mismatch: {self.dim} != {other.dim}")

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        mapping = self.as_mapping()
        for term in other.terms:
            mapping[term.exponent] = mapping.get(term.exponent, Fraction(0)) + term.coeff
        return Series.from_mapping(mapping, self.dim)

    def __neg__(self) -> "Series":
        return Series(tuple(Term(t.exponent, -t.coeff) for t in self.terms), self.dim)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        mapping: Dict[Exponent, Fraction] = {}
        for left in self.terms:
            for right in other.terms:
                exp = left.exponent + right.exponent
                mapping[exp] = mapping.get(exp, Fraction(0)) + left.coeff * right.coeff
        return Series.from_mapping(mapping, self.dim)

    def scale(self, factor: Rational) -> "Series":
        factor = Fraction(factor)
        if factor == 0:
            return Series.zero(self.dim)
        return Series(tuple(Term(t.exponent, t.coeff * factor) for t in self.terms), self.dim)

    def shift(self, exponent: Exponent, coeff: Rational = 1) -> "Series":
        """coeff * t^exponent 를 곱한 급수 (단항식 곱셈)"""
        coeff = Fraction(coeff)
        if coeff == 0:
            return Series.zero(self.dim)
        return Series(
            tuple(Term(t.exponent + exponent, t.coeff * coeff) for t in self.terms),
            self.dim,
        )

    # --- 순서: 차이의 선행 계수 부호 ---

    def compare(self, other: "Series") -> int:
        """sign(self - other). 차이를 만들지 않고 내림차순 항을 나란히 훑습니다"""
        self._check(other)
        for mine, theirs in zip_longest(self.terms, other.terms):
            if theirs is None or (mine is not None and mine.exponent > theirs.exponent):
                return 1 if mine.coeff > 0 else -1
            if mine is None or theirs.exponent > mine.exponent:
                return -1 if theirs.coeff > 0 else 1
            if mine.coeff != theirs.coeff:
                return 1 if mine.coeff > theirs.coeff else -1
        return 0

    def __lt__(self, other: "Series") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "Series") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "Series") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "Series") -> bool:
        return self.compare(other) >= 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.dim, self.terms))

    def __str__(self) -> str:
        from src.cli.grammar import format_series

        return format_series(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"
