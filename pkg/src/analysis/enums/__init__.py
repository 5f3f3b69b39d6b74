from .direction import Direction

__all__ = ["Direction"]
