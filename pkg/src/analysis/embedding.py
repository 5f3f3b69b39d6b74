from src.analysis.entities import EmbedResult
from src.core.exceptions import NotE4Equivalent
from src.equivalence.deciders import holds, require_nonstandard
from src.equivalence.enums import EquivLevel
from src.series import Element


def real_embed(anchor: Element, b: Element) -> EmbedResult:
    """anchor의 E4-클래스 안에서 b의 E3-클래스를 유리수로 보냅니다

    d=2에서 첫 성분이 양수이면 deg(b)의 첫 성분을 그대로 씁니다.
    E3-클래스마다 일정하고, 클래스 사이에서 순서를 보존하며,
    곱에 대해 덧셈적입니다 (embed(b1*b2) = embed(b1) + embed(b2)).
    첫 성분이 0인 클래스에서는 둘째 성분을 degenerate 표시와 함께 돌려줍니다.
    """
    require_nonstandard(anchor, b)
    if not holds(EquivLevel.E4, anchor, b):
        raise NotE4Equivalent(
            f"{b} is not in the E4-class of {anchor}",
            deg_a=str(anchor.degree()),
            deg_b=str(b.degree()),
        )
    components = b.degree().components
    if components[0] == 0:
        return EmbedResult(value=components[1], degenerate=True)
    return EmbedResult(value=components[0], degenerate=False)
