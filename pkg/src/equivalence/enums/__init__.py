from .equiv_level import EquivLevel

__all__ = ["EquivLevel"]
