"""series 패키지

비표준 모델 M(유한 일반화 멱급수의 정수 부분)의 정확 연산과 순서.
"""

from src.series.arithmetic import add, cmp, deg, is_standard, mul, pow, scalar_mul, sub
from src.series.division import ceil_div_scalar, divmod, divmod_scalar, floor_quotient, root_floor
from src.series.entities import Element, Exponent, ModelConfig, Series, Term
from src.series.enums import Ordering

__all__ = [
    "Element",
    "Exponent",
    "ModelConfig",
    "Ordering",
    "Series",
    "Term",
    "add",
    "ceil_div_scalar",
    "cmp",
    "deg",
    "divmod",
    "divmod_scalar",
    "floor_quotient",
    "is_standard",
    "mul",
    "pow",
    "root_floor",
    "scalar_mul",
    "sub",
]
