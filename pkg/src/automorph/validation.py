"""기술자 검증

probe 집합 위에서 순서 보존, 역사상 왕복, 앵커, E0 보존을 정확 연산으로
확인합니다. 위반은 해당 probe 쌍과 함께 ValidationFailure로 올립니다.
"""

from itertools import combinations_with_replacement
from time import time
from typing import List, Optional, Sequence, Tuple

from pydantic import Field

from src.automorph.entities.descriptor import Descriptor
from src.automorph.evaluation import apply, apply_inverse
from src.core.exceptions import InvariantViolation, ModelArithmeticError, ValidationFailure
from src.series import Element, Ordering, Series, add, cmp, divmod_scalar, scalar_mul
from src.shared.logger import get_logger
from src.shared.schema import BaseSchema

logger = get_logger(__name__)


class CheckResult(BaseSchema):
    name: str = Field(..., description="검사 이름")
    checked: int = Field(..., description="검사한 원소/쌍 수")


class ValidationReport(BaseSchema):
    passed: bool = True
    probes: int = Field(..., description="probe 수")
    checks: List[CheckResult] = Field(default_factory=list)


class AlmostAddReport(BaseSchema):
    """덧셈 결손 f(a+b) - (f(a)+f(b)) 요약"""

    pairs: int = Field(..., description="검사한 쌍 수")
    standard_defects: int = Field(..., description="결손이 표준 정수인 쌍 수")
    nonstandard_pairs: List[Tuple[str, str]] = Field(default_factory=list)
    max_abs_defect: int = 0
    almost_additive: bool = Field(..., description="모든 결손이 표준인지")


def _fail(check: str, message: str, pair: Tuple[Element, ...]) -> ValidationFailure:
    return ValidationFailure(
        f"{check}: {message} at ({', '.join(str(p) for p in pair)})", check=check, pair=pair
    )


def _image(d: Descriptor, x: Element, check: str, inverse: bool = False) -> Element:
    try:
        return apply_inverse(d, x) if inverse else apply(d, x)
    except ModelArithmeticError as e:
        raise _fail(check, f"evaluation failed ({e.code})", (x,)) from e


def validate(d: Descriptor, probes: Sequence[Element]) -> ValidationReport:
    """probe는 엄격히 증가하는 순서여야 합니다"""
    start_time = time()
    probes = list(probes)
    for x, y in zip(probes, probes[1:]):
        if cmp(x, y) != Ordering.LESS:
            raise InvariantViolation(f"probes must be strictly increasing: {x}, {y}")

    images = [_image(d, x, "evaluation") for x in probes]

    for (x, y), (fx, fy) in zip(zip(probes, probes[1:]), zip(images, images[1:])):
        if cmp(fx, fy) != Ordering.LESS:
            raise _fail("monotonicity", f"images {fx}, {fy} are not increasing", (x, y))

    for x, fx in zip(probes, images):
        if _image(d, fx, "inverse", inverse=True) != x:
            raise _fail("inverse", "inverse does not return the probe", (x, fx))
        back = _image(d, x, "surjectivity", inverse=True)
        if _image(d, back, "surjectivity") != x:
            raise _fail("surjectivity", "probe is not an image", (x, back))

    anchors = d.anchor_pairs()
    for source, target in anchors:
        if apply(d, source) != target:
            raise _fail("anchor", f"expected image {target}", (source, target))

    transported = 0
    for (x, y), (fx, fy) in zip(zip(probes, probes[1:]), zip(images, images[1:])):
        if x.is_standard() or y.is_standard():
            continue
        if fx.is_standard() or fy.is_standard():
            raise _fail("e0_transport", "nonstandard probe mapped to a standard element", (x, y))
        transported += 1
        same_class = x.positive_part() == y.positive_part()
        if same_class != (fx.positive_part() == fy.positive_part()):
            raise _fail("e0_transport", "E0 relation not preserved", (x, y))

    report = ValidationReport(
        passed=True,
        probes=len(probes),
        checks=[
            CheckResult(name="monotonicity", checked=max(len(probes) - 1, 0)),
            CheckResult(name="inverse", checked=len(probes)),
            CheckResult(name="surjectivity", checked=len(probes)),
            CheckResult(name="anchor", checked=len(anchors)),
            CheckResult(name="e0_transport", checked=transported),
        ],
    )
    logger.info(f"검증 통과: probe {len(probes)}개, 소요 시간: {time() - start_time:.4f}초")
    return report


def anchor_probes(points: Sequence[Element], spread: int = 3) -> List[Element]:
    """앵커 주변의 정렬된 probe: x +- k, 2x, x/2, 양의 지수 부분, 작은 표준수"""
    dim = points[0].dim
    found = {Element.constant(k, dim) for k in range(0, spread + 1)}
    for x in points:
        candidates = [x, scalar_mul(x, 2), divmod_scalar(x, 2)[0], x.positive_part()]
        for base in candidates:
            for k in range(-spread, spread + 1):
                shifted = base.to_series() + Series.constant(k, dim)
                if shifted.signum() >= 0 and (k >= 0 or not base.is_standard()):
                    found.add(Element.of(shifted))
    return sorted(found)


def almost_add_defect(d: Descriptor, a: Element, b: Element) -> Optional[int]:
    """f(a+b) - (f(a)+f(b)), 표준 정수가 아니면 None"""
    defect = apply(d, add(a, b)).to_series() - (apply(d, a).to_series() + apply(d, b).to_series())
    degree = defect.degree()
    if degree is not None and not degree.is_zero():
        return None
    return int(defect.constant_term())


def almost_add_report(d: Descriptor, probes: Sequence[Element]) -> AlmostAddReport:
    pairs = 0
    standard = 0
    worst = 0
    nonstandard: List[Tuple[str, str]] = []
    for x, y in combinations_with_replacement(probes, 2):
        pairs += 1
        defect = almost_add_defect(d, x, y)
        if defect is None:
            nonstandard.append((str(x), str(y)))
            continue
        standard += 1
        worst = max(worst, abs(defect))
    return AlmostAddReport(
        pairs=pairs,
        standard_defects=standard,
        nonstandard_pairs=nonstandard,
        max_abs_defect=worst,
        almost_additive=not nonstandard,
    )
