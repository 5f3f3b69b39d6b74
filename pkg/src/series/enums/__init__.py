from .ordering import Ordering

__all__ = ["Ordering"]
