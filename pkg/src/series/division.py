"""나머지 있는 나눗셈과 k제곱근 바닥값

- divmod_scalar: 표준 n으로 나누기 (PA-3, 항상 정의됨)
- divmod / floor_quotient: 원소로 나누기 (d=1에서 항상 종료, d=2에서는 div_budget 제한)
- root_floor: m^k <= a < (m+1)^k 인 m (유리 계수로 표현 불가능하면 오류)

모든 결과는 반환 전에 정의 조건을 정확 연산으로 다시 검사합니다.
"""

import math
from fractions import Fraction
from typing import Dict, Optional, Tuple

from sympy import integer_nthroot

from src.core.exceptions import (
    CoefficientNotRepresentable,
    DimensionMismatch,
    InvariantViolation,
    NonTerminatingQuotient,
)
from src.series.arithmetic import add, cmp, mul, pow
from src.series.entities.element import Element
from src.series.entities.exponent import Exponent
from src.series.entities.model_config import ModelConfig
from src.series.entities.series import Series
from src.series.enums.ordering import Ordering
from src.shared.logger import get_logger

logger = get_logger(__name__)


def _config(config: Optional[ModelConfig], dim: int) -> ModelConfig:
    return config if config is not None else ModelConfig.from_settings(dim=dim)


def _floor_with_tail(constant: Fraction, tail_sign: int) -> int:
    """floor(constant + eps), eps는 부호가 tail_sign인 무한소"""
    if constant.denominator != 1:
        return math.floor(constant)
    return int(constant) if tail_sign >= 0 else int(constant) - 1


def divmod_scalar(a: Element, n: int) -> Tuple[Element, int]:
    """a = n*q + r, 0 <= r < n

    양의 지수 계수는 정확히 n으로 나누고 상수항만 floor 나눗셈합니다.
    """
    if n < 1:
        raise InvariantViolation(f"divisor must be a positive integer, got {n}")
    constant = int(a.constant_term())
    q_const, r = constant // n, constant % n
    quotient = a.to_series().positive_part().scale(Fraction(1, n))
    quotient = quotient + Series.constant(q_const, a.dim)
    return Element.of(quotient), r


def ceil_div_scalar(a: Element, n: int) -> Element:
    """min{b : n*b >= a}"""
    q, r = divmod_scalar(a, n)
    return add(q, Element.constant(1, a.dim)) if r > 0 else q


def _check_division(a: Element, b: Element, q: Element, r: Element) -> None:
    if add(mul(q, b), r) != a:
        raise InvariantViolation(f"division check failed: {q}*{b} + {r} != {a}")
    if cmp(r, b) != Ordering.LESS:
        raise InvariantViolation(f"remainder {r} is not below divisor {b}")


def divmod(
    a: Element, b: Element, config: Optional[ModelConfig] = None
) -> Tuple[Element, Element]:
    """a = q*b + r, 0 <= r < b

    장제법으로 지수 >= 0 인 몫 항을 모두 구한 뒤, 상수 몫은 남은
    무한소 꼬리(remainder/b)의 부호를 보고 바닥값을 취합니다.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} != {b.dim}")
    if b.is_zero():
        raise InvariantViolation("divisor must be positive")
    cfg = _config(config, a.dim)

    if b.is_standard():
        q, r = divmod_scalar(a, int(b.constant_term()))
        return q, Element.constant(r, a.dim)

    lead_b = b.leading
    divisor = b.to_series()
    remainder = a.to_series()
    quotient: Dict[Exponent, Fraction] = {}
    steps = 0
    while not remainder.is_zero():
        lead_r = remainder.leading
        exp = lead_r.exponent - lead_b.exponent
        if exp.sign() < 0:
            break
        steps += 1
        if a.dim == 2 and steps > cfg.div_budget:
            logger.info(f"몫 전개 예산 초과: {a} / {b} (budget={cfg.div_budget})")
            raise NonTerminatingQuotient(
                f"quotient of {a} by {b} exceeds {cfg.div_budget} terms",
                budget=cfg.div_budget,
            )
        coeff = lead_r.coeff / lead_b.coeff
        quotient[exp] = quotient.get(exp, Fraction(0)) + coeff
        remainder = remainder - divisor.shift(exp, coeff)

    zero = Exponent.zero(a.dim)
    constant = quotient.pop(zero, Fraction(0))
    whole = _floor_with_tail(constant, remainder.signum())
    quotient[zero] = Fraction(whole)
    q = Element.of(Series.from_mapping(quotient, a.dim))
    r = Element.of(a.to_series() - q.to_series() * divisor)
    _check_division(a, b, q, r)
    return q, r


def floor_quotient(a: Element, b: Element, config: Optional[ModelConfig] = None) -> Element:
    return divmod(a, b, config)[0]


def rational_root(value: Fraction, k: int) -> Optional[Fraction]:
    """value의 유리 k제곱근 (없으면 None). value > 0"""
    num, num_exact = integer_nthroot(value.numerator, k)
    den, den_exact = integer_nthroot(value.denominator, k)
    if not (num_exact and den_exact):
        return None
    return Fraction(int(num), int(den))


def _root_contract(a: Element, m: Element, k: int) -> bool:
    one = Element.constant(1, a.dim)
    return cmp(pow(m, k), a) != Ordering.GREATER and cmp(a, pow(add(m, one), k)) == Ordering.LESS


def root_floor(a: Element, k: int, config: Optional[ModelConfig] = None) -> Element:
    """m^k <= a < (m+1)^k 인 m

    선행 계수의 유리 k제곱근에서 시작해 a - S^k 의 선행항을 k*S^(k-1)로
    나누는 방식으로 근의 급수를 지수 >= 0 까지 전개합니다.
    """
    if k < 1:
        raise InvariantViolation(f"root index must be positive, got {k}")
    one = Element.constant(1, a.dim)
    if cmp(a, one) == Ordering.LESS:
        raise InvariantViolation("root_floor requires a >= 1")
    if k == 1:
        return a
    cfg = _config(config, a.dim)

    if a.is_standard():
        root, _ = integer_nthroot(int(a.constant_term()), k)
        return Element.constant(int(root), a.dim)

    lead = a.leading
    lead_root = rational_root(lead.coeff, k)
    if lead_root is None:
        raise CoefficientNotRepresentable(
            f"leading coefficient {lead.coeff} of {a} has no rational {k}-th root"
        )
    root_exp = lead.exponent.scale(Fraction(1, k))
    denominator = lead_root ** (k - 1) * k
    shift = root_exp.scale(k - 1)

    target = a.to_series()
    partial: Dict[Exponent, Fraction] = {root_exp: lead_root}
    steps = 1
    while True:
        current = Series.from_mapping(partial, a.dim)
        residual = target - _series_pow(current, k)
        if residual.is_zero():
            break
        exp = residual.leading.exponent - shift
        if exp.sign() < 0:
            break
        steps += 1
        if a.dim == 2 and steps > cfg.div_budget:
            raise NonTerminatingQuotient(
                f"root expansion of {a} exceeds {cfg.div_budget} terms",
                budget=cfg.div_budget,
            )
        partial[exp] = partial.get(exp, Fraction(0)) + residual.leading.coeff / denominator

    zero = Exponent.zero(a.dim)
    constant = partial.pop(zero, Fraction(0))
    partial[zero] = Fraction(_floor_with_tail(constant, residual.signum()))
    candidate = Element.of(Series.from_mapping(partial, a.dim))

    # 정확한 거듭제곱 경계에서의 off-by-one 보정
    for m in _neighbours(candidate):
        if _root_contract(a, m, k):
            return m
    raise CoefficientNotRepresentable(f"no rational-coefficient {k}-th root floor for {a}")


def _neighbours(m: Element):
    yield m
    one = Element.constant(1, m.dim)
    yield add(m, one)
    if not m.is_zero() and cmp(m, one) != Ordering.LESS:
        yield Element.of(m.to_series() - one.to_series())


def _series_pow(base: Series, n: int) -> Series:
    result = Series.constant(1, base.dim)
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result
