"""기술자 평가: apply, 역평가, invert, compose"""

from fractions import Fraction
from functools import singledispatch

from src.automorph.entities.descriptor import (
    Compose,
    Descriptor,
    E0ClassShift,
    E2Affine,
    E3Shift,
    Identity,
    Inverse,
    SegmentExtension,
)
from src.series import Element, Ordering, Series, cmp, sub


def apply(d: Descriptor, x: Element) -> Element:
    """x의 상"""
    return _forward(d, x)


def apply_inverse(d: Descriptor, y: Element) -> Element:
    """y의 원상"""
    return _backward(d, y)


def invert(d: Descriptor) -> Descriptor:
    if isinstance(d, Identity):
        return d
    if isinstance(d, Inverse):
        return d.inner
    if isinstance(d, E0ClassShift):
        return E0ClassShift(anchor=d.anchor, offset=-d.offset)
    if isinstance(d, Compose):
        pinned = tuple((y, x) for x, y in d.pinned)
        return Compose(parts=tuple(invert(p) for p in reversed(d.parts)), pinned=pinned)
    return Inverse(inner=d)


def compose(d1: Descriptor, d2: Descriptor, pinned=()) -> Descriptor:
    """d1 o d2 (d2를 먼저 적용)"""
    if isinstance(d2, Identity) and not pinned:
        return d1
    if isinstance(d1, Identity) and not pinned:
        return d2
    return Compose(parts=(d1, d2), pinned=tuple(pinned))


# --- 정방향 ---


@singledispatch
def _forward(d, x: Element) -> Element:
    raise TypeError(f"unknown descriptor kind: {type(d).__name__}")


@_forward.register
def _(d: Identity, x: Element) -> Element:
    return x


@_forward.register
def _(d: E0ClassShift, x: Element) -> Element:
    if x.is_standard() or x.positive_part() != d.anchor.positive_part():
        return x
    return Element.of(x.to_series() + Series.constant(d.offset, x.dim))


def _affine_image(d: E2Affine, rep: Element) -> Series:
    """n(rep - c) + c + m"""
    c = d.c.to_series()
    return (rep.to_series() - c).scale(d.n) + c + Series.constant(d.m, rep.dim)


@_forward.register
def _(d: E2Affine, x: Element) -> Element:
    policy = d.policy()
    key = policy.key(x)
    if key <= policy.key(d.c):
        return x
    rep = policy.rep_of_key(key)
    return Element.of(_affine_image(d, rep) + (x.to_series() - rep.to_series()))


@_forward.register
def _(d: E3Shift, x: Element) -> Element:
    policy = d.policy()
    key = policy.key(x)
    if key.is_zero():
        return x
    rep = policy.rep_of_key(key)
    offset = x.to_series() - rep.to_series()
    return Element.of(d.c.to_series() * rep.to_series() + offset)


@_forward.register
def _(d: Compose, x: Element) -> Element:
    for part in reversed(d.parts):
        x = _forward(part, x)
    return x


@_forward.register
def _(d: Inverse, x: Element) -> Element:
    return _backward(d.inner, x)


@_forward.register
def _(d: SegmentExtension, x: Element) -> Element:
    if cmp(x, d.a) == Ordering.LESS:
        return _forward(d.below, x)
    return Element.of(d.b.to_series() + _forward(d.above, sub(x, d.a)).to_series())


# --- 역방향 ---


@singledispatch
def _backward(d, y: Element) -> Element:
    raise TypeError(f"unknown descriptor kind: {type(d).__name__}")


@_backward.register
def _(d: Identity, y: Element) -> Element:
    return y


@_backward.register
def _(d: E0ClassShift, y: Element) -> Element:
    return _forward(invert(d), y)


@_backward.register
def _(d: E2Affine, y: Element) -> Element:
    policy = d.policy()
    key_c = policy.key(d.c)
    key_y = policy.key(y)
    if key_y <= key_c:
        return y
    # n*P_x - (n-1)*P_c = P_y
    key_x = (key_y + key_c.scale(d.n - 1)).scale(Fraction(1, d.n))
    rep = policy.rep_of_key(key_x)
    return Element.of(rep.to_series() + (y.to_series() - _affine_image(d, rep)))


@_backward.register
def _(d: E3Shift, y: Element) -> Element:
    policy = d.policy()
    key_y = policy.key(y)
    if key_y.is_zero():
        return y
    lead = d.c.leading
    key_x = key_y.shift(-lead.exponent, 1 / lead.coeff)
    rep = policy.rep_of_key(key_x)
    image = d.c.to_series() * rep.to_series()
    return Element.of(rep.to_series() + (y.to_series() - image))


@_backward.register
def _(d: Compose, y: Element) -> Element:
    for part in d.parts:
        y = _backward(part, y)
    return y


@_backward.register
def _(d: Inverse, y: Element) -> Element:
    return _forward(d.inner, y)


@_backward.register
def _(d: SegmentExtension, y: Element) -> Element:
    if cmp(y, d.b) == Ordering.LESS:
        return _backward(d.below, y)
    return Element.of(d.a.to_series() + _backward(d.above, sub(y, d.b)).to_series())
