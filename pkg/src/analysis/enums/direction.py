from enum import Enum


class Direction(str, Enum):
    """클래스 기준의 방향: up은 클래스 위쪽, down은 아래쪽"""

    UP = "up"
    DOWN = "down"
