"""지수와 급수 값 객체 단위 테스트"""

from fractions import Fraction

from src.series import Element, Exponent, ModelConfig


def test_exponent_order_is_lexicographic():
    # Given
    big, small = Exponent.of(1, -5), Exponent.of(0, 100)

    # Then
    assert small < big
    assert big.is_positive()
    assert Exponent.of(0, -1).sign() < 0


def test_exponent_archimedean_helpers():
    # Given
    first, second = Exponent.of(1, 3), Exponent.of(0, 2)

    # Then
    assert first.archimedean_index() == 0
    assert second.archimedean_index() == 1
    assert second.is_dominated_by(first)
    assert not first.is_dominated_by(second)
    assert first.same_archimedean_class(Exponent.of(2, -7))
    assert not first.same_archimedean_class(second)


def test_element_positive_part_and_constant():
    # Given
    a = Element.of(Element.monomial(2, (3,)).to_series() + Element.constant(4, 1).to_series())

    # Then
    assert a.constant_term() == Fraction(4)
    assert a.positive_part() == Element.monomial(2, (3,))
    assert not a.is_standard()


def test_model_config_from_settings_overrides():
    # When
    config = ModelConfig.from_settings(dim=2, div_budget=5, seed=None)

    # Then
    assert config.dim == 2
    assert config.div_budget == 5
    assert config.seed == 7
