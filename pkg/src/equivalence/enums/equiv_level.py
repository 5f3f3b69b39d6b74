from enum import IntEnum


class EquivLevel(IntEnum):
    """이 모델에서 결정 가능한 동치 관계 E0..E4"""

    E0 = 0
    E1 = 1
    E2 = 2
    E3 = 3
    E4 = 4

    @property
    def uses_bound(self) -> bool:
        """표준 n 증인을 쓰는 단계 (0, 2, 4)"""
        return self in (EquivLevel.E0, EquivLevel.E2, EquivLevel.E4)
