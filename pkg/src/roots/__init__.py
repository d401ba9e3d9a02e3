"""
Real roots: algebraic numbers, exact signs and lazily refined values

Fiber root counting lives in src.roots.fiber, which builds on the subresultant ladders and is
imported from there directly.
"""

from .algebraic import (
    AlgebraicNumber,
    as_algebraic,
    compare,
    count_real_roots,
    isolate_real_roots,
    refine,
    sample_between,
    set_refinement_limit,
    sign_at,
)
from .values import (
    CriticalOrdinate,
    LinearValue,
    QuadraticRoot,
    RealValue,
    compare_distinct,
    sign_nonzero,
)

__all__ = [
    "AlgebraicNumber",
    "as_algebraic",
    "compare",
    "count_real_roots",
    "isolate_real_roots",
    "refine",
    "sample_between",
    "set_refinement_limit",
    "sign_at",
    "CriticalOrdinate",
    "LinearValue",
    "QuadraticRoot",
    "RealValue",
    "compare_distinct",
    "sign_nonzero",
]
