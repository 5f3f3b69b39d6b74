import logging
import sys

from src.core.config import settings

_FORMAT = "%(asctime)s [%(levelname)s] %(name)s - %(message)s"
_handler = None


def get_logger(name: str) -> logging.Logger:
    """
    표준 에러로 출력하는 로거를 반환합니다.
    표준 출력은 JSON 결과 전용이므로 로그는 항상 stderr로 보냅니다.
    """
    global _handler
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter(_FORMAT))
        root = logging.getLogger("src")
        root.addHandler(_handler)
        root.setLevel(settings.LOG_LEVEL.upper())
        root.propagate = False
    return logging.getLogger(name)
