from .verdict import BoundN, Companion, Exhausted, Reason, Verdict, Witness

__all__ = ["BoundN", "Companion", "Exhausted", "Reason", "Verdict", "Witness"]
