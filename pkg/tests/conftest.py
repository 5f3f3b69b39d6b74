import logging

import pytest

from tests.fixtures.model_fixtures import d1, d2, el, el2  # noqa: F401


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    """
    테스트 세션 동안 src 로거를 WARNING으로 고정하고 끝나면 원복합니다.
    """
    logger = logging.getLogger("src")
    original_level = logger.level
    logger.setLevel(logging.WARNING)

    yield

    logger.setLevel(original_level)
