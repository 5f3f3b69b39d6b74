"""analysis 패키지

클래스 경계 수열과 E4-클래스 안의 E3-클래스 실수 임베딩.
"""

from src.analysis.embedding import real_embed
from src.analysis.entities import ClassSequence, EmbedResult
from src.analysis.enums import Direction
from src.analysis.sequences import (
    b11_predicate,
    b11_seq,
    certify_b11_term,
    check_cofinality,
    cofinality_bound,
    e0_seq,
    e1_seq,
    e2_seq,
    passing_n,
)

__all__ = [
    "ClassSequence",
    "Direction",
    "EmbedResult",
    "b11_predicate",
    "b11_seq",
    "certify_b11_term",
    "check_cofinality",
    "cofinality_bound",
    "e0_seq",
    "e1_seq",
    "e2_seq",
    "passing_n",
    "real_embed",
]
