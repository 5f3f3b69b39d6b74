"""모델 M의 반환(semiring) 연산과 순서

모든 함수는 순수 함수이며 결과는 Element 불변식을 다시 검사받습니다.
"""

from typing import Optional

from src.core.exceptions import DimensionMismatch, Underflow
from src.series.entities.element import Element
from src.series.entities.exponent import Exponent
from src.series.entities.series import Series
from src.series.enums.ordering import Ordering


def _same_dim(a: Series, b: Series) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} != {b.dim}")


def add(a: Element, b: Element) -> Element:
    _same_dim(a, b)
    return Element.of(a.to_series() + b.to_series())


def mul(a: Element, b: Element) -> Element:
    _same_dim(a, b)
    return Element.of(a.to_series() * b.to_series())


def scalar_mul(a: Element, n: int) -> Element:
    """n * a (표준 n >= 0)"""
    if n < 0:
        raise ValueError("scalar must be a natural number")
    return Element.of(a.to_series().scale(n))


def difference(a: Series, b: Series) -> Series:
    """체 안에서의 부호 있는 차이 a - b"""
    _same_dim(a, b)
    return a.to_series() - b.to_series()


def sub(a: Element, b: Element) -> Element:
    """b <= a 일 때 b + e = a 를 만족하는 유일한 e"""
    diff = difference(a, b)
    if diff.signum() < 0:
        raise Underflow(f"cannot subtract {b} from smaller {a}")
    return Element.of(diff)


def cmp(a: Series, b: Series) -> Ordering:
    _same_dim(a, b)
    sign = a.compare(b)
    if sign < 0:
        return Ordering.LESS
    if sign > 0:
        return Ordering.GREATER
    return Ordering.EQUAL


def pow(a: Element, n: int) -> Element:
    """반복 제곱. pow(a, 0) = 1"""
    if n < 0:
        raise ValueError("exponent must be a natural number")
    result = Series.constant(1, a.dim)
    base = a.to_series()
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return Element.of(result)


def deg(a: Series) -> Optional[Exponent]:
    """선행 지수. 0이면 None(Bottom)"""
    return a.degree()


def is_standard(a: Element) -> bool:
    return a.is_standard()
