from .exponent import Exponent
from .series import Series, Term
from .element import Element
from .model_config import ModelConfig

__all__ = ["Exponent", "Series", "Term", "Element", "ModelConfig"]
