"""Covering array generation via Q-learning-arbitrated sine-cosine search.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._cagen import (
    CAConfig,
    RunReport,
    VerifySummary,
    bonferroni_holm,
    builtin_suite_names,
    generate,
    parse_ca_notation,
    reference_values,
    render_ca_notation,
    size_lower_bound,
    tuple_count,
    verify,
    wilcoxon_rank_sum,
)

__all__ = [
    "CAConfig",
    "RunReport",
    "VerifySummary",
    "bonferroni_holm",
    "builtin_suite_names",
    "generate",
    "parse_ca_notation",
    "reference_values",
    "render_ca_notation",
    "size_lower_bound",
    "tuple_count",
    "verify",
    "wilcoxon_rank_sum",
]
