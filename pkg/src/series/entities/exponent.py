"""지수(Exponent) 값 객체

Q^d 원소를 사전식(lexicographic) 순서로 비교합니다. d는 1 또는 2.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from pydantic_core import core_schema

Rational = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Exponent:
    """Q^d의 원소

    dataclass(order=True)는 components 튜플을 비교하므로
    비교 순서가 곧 사전식 순서입니다.

    Attributes:
        components: 유리수 성분 튜플 (길이 = 차원)
    """

    components: Tuple[Fraction, ...]

    @classmethod
    def of(cls, *values: Rational) -> "Exponent":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zero(cls, dim: int) -> "Exponent":
        return cls((Fraction(0),) * dim)

    @classmethod
    def __get_pydantic_core_schema__(cls, source, handler):
        return core_schema.is_instance_schema(
            cls,
            serialization=core_schema.plain_serializer_function_ser_schema(str, when_used="json"),
        )

    @property
    def dim(self) -> int:
        return len(self.components)

    def _check(self, other: "Exponent") -> None:
        if self.dim != other.dim:
            raise ValueError(f"exponent dimension mismatch: {self.dim} != {other.dim}")

    def __add__(self, other: "Exponent") -> "Exponent":
        self._check(other)
        return Exponent(tuple(x + y for x, y in zip(self.components, other.components)))

    def __sub__(self, other: "Exponent") -> "Exponent":
        self._check(other)
        return Exponent(tuple(x - y for x, y in zip(self.components, other.components)))

    def __neg__(self) -> "Exponent":
        return Exponent(tuple(-x for x in self.components))

    def scale(self, factor: Rational) -> "Exponent":
        factor = Fraction(factor)
        return Exponent(tuple(x * factor for x in self.components))

    def sign(self) -> int:
        """사전식 부호: 첫 번째 0이 아닌 성분의 부호"""
        for x in self.components:
            if x != 0:
                return 1 if x > 0 else -1
        return 0

    def is_zero(self) -> bool:
        return self.sign() == 0

    def is_positive(self) -> bool:
        return self.sign() > 0

    def archimedean_index(self) -> Optional[int]:
        """첫 번째 0이 아닌 성분의 위치 (아르키메데스 클래스). 0이면 None"""
        for index, x in enumerate(self.components):
            if x != 0:
                return index
        return None

    def is_dominated_by(self, other: "Exponent") -> bool:
        """모든 표준 n에 대해 n * self < other 인지

        other > 0 일 때만 의미가 있으며, 그 외에는 False.
        """
        self._check(other)
        if not other.is_positive():
            return False
        if not self.is_positive():
            return True
        return self.archimedean_index() > other.archimedean_index()

    def same_archimedean_class(self, other: "Exponent") -> bool:
        """양의 지수 두 개가 서로를 표준 배수로 넘어설 수 있는지"""
        self._check(other)
        if not (self.is_positive() and other.is_positive()):
            return False
        return self.archimedean_index() == other.archimedean_index()

    def __str__(self) -> str:
        parts = [str(x) for x in self.components]
        return parts[0] if len(parts) == 1 else "(" + ",".join(parts) + ")"
