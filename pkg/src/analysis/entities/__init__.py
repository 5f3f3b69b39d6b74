from .class_sequence import ClassSequence, EmbedResult

__all__ = ["ClassSequence", "EmbedResult"]
