"""반환 법칙, 순서 법칙, 이산성, 나눗셈과 근의 계약, 문법 왕복"""

from itertools import permutations

from src.cli.grammar import format_element, parse_element
from src.cli.sampler import ElementSampler
from src.cli.suites.case import CaseRecorder
from src.series import (
    Element,
    ModelConfig,
    Ordering,
    add,
    cmp,
    divmod,
    divmod_scalar,
    mul,
    pow,
    root_floor,
    scalar_mul,
)

_REVERSED = {
    Ordering.LESS: Ordering.GREATER,
    Ordering.EQUAL: Ordering.EQUAL,
    Ordering.GREATER: Ordering.LESS,
}


def algebra_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    a, b, c = sampler.element(), sampler.element(), sampler.element()
    one = Element.constant(1, sampler.dim)

    rec.expect(add(a, b) == add(b, a), f"add not commutative: {a}, {b}")
    rec.expect(add(add(a, b), c) == add(a, add(b, c)), f"add not associative: {a}, {b}, {c}")
    rec.expect(mul(a, b) == mul(b, a), f"mul not commutative: {a}, {b}")
    rec.expect(mul(mul(a, b), c) == mul(a, mul(b, c)), f"mul not associative: {a}, {b}, {c}")
    rec.expect(
        mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), f"not distributive: {a}, {b}, {c}"
    )
    rec.expect(mul(one, a) == a, f"1 is not a unit for {a}")
    rec.expect(pow(a, 0) == one, f"pow({a}, 0) != 1")

    order = cmp(a, b)
    rec.expect(cmp(b, a) == _REVERSED[order], f"cmp not antisymmetric: {a}, {b}")
    if order == Ordering.LESS:
        rec.expect(cmp(add(a, c), add(b, c)) == Ordering.LESS, f"a<b but a+c>=b+c: {a}, {b}, {c}")
        if not c.is_zero():
            rec.expect(cmp(mul(a, c), mul(b, c)) == Ordering.LESS, f"a<b but ac>=bc: {a}, {b}, {c}")
    for x, y, z in permutations([a, b, c]):
        if cmp(x, y) == Ordering.LESS and cmp(y, z) == Ordering.LESS:
            rec.expect(cmp(x, z) == Ordering.LESS, f"cmp not transitive: {x}, {y}, {z}")
    rec.expect(
        not (cmp(a, b) == Ordering.LESS and cmp(b, add(a, one)) == Ordering.LESS),
        f"element strictly between {a} and {a}+1: {b}",
    )

    n = sampler.small_int(1, 9)
    q, r = divmod_scalar(a, n)
    rec.expect(
        add(scalar_mul(q, n), Element.constant(r, a.dim)) == a and 0 <= r < n,
        f"divmod_scalar contract failed: {a} by {n}",
    )

    if not b.is_zero():
        with rec.guard(f"divmod({a}, {b})"):
            q, r = divmod(a, b, config)
            rec.expect(
                add(mul(q, b), r) == a and cmp(r, b) == Ordering.LESS,
                f"divmod contract failed: {a} by {b}",
            )

    if cmp(a, one) != Ordering.LESS:
        k = sampler.small_int(2, 3)
        with rec.guard(f"root_floor({a}, {k})"):
            m = root_floor(a, k, config)
            rec.expect(
                cmp(pow(m, k), a) != Ordering.GREATER
                and cmp(a, pow(add(m, one), k)) == Ordering.LESS,
                f"root_floor contract failed: {a}, k={k}",
            )


def roundtrip_case(rec: CaseRecorder, sampler: ElementSampler, config: ModelConfig) -> None:
    e = sampler.element()
    text = format_element(e)
    rec.expect(parse_element(text, e.dim) == e, f"parse(format(e)) != e for {text}")
