"""
Subresultants: Sylvester-Habicht matrices, resultants and signed subresultant ladders
"""

from .sylvester import Resultant, resultant, sylvester_habicht
from .sequence import (
    SignedSubresultantSequence,
    count_distinct_real_roots,
    gcd_degree_at,
    has_single_root,
    permanences_minus_variations,
    shared_root_y,
    signed_subresultants,
)

__all__ = [
    "Resultant",
    "resultant",
    "sylvester_habicht",
    "SignedSubresultantSequence",
    "count_distinct_real_roots",
    "gcd_degree_at",
    "has_single_root",
    "permanences_minus_variations",
    "shared_root_y",
    "signed_subresultants",
]
