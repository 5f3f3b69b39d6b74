import pytest

from src.cli.grammar import parse_element
from src.series import ModelConfig


@pytest.fixture
def d1():
    """d=1 모델 설정"""
    return ModelConfig(dim=1, div_budget=64, search_n_max=64, seed=7, validation_probes=20)


@pytest.fixture
def d2():
    """d=2 모델 설정"""
    return ModelConfig(dim=2, div_budget=64, search_n_max=64, seed=7, validation_probes=20)


@pytest.fixture
def el():
    """d=1 원소 텍스트 파서"""
    return lambda text: parse_element(text, 1)


@pytest.fixture
def el2():
    """d=2 원소 텍스트 파서"""
    return lambda text: parse_element(text, 2)
