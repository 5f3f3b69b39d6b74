from enum import Enum


class Ordering(str, Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
