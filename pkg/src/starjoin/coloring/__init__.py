"""Exact, heuristic and local chromatic numbers."""

from .local import KstReport, KstVerdict, LocalChromaticResult, kst_check, kst_size_threshold, local_chromatic
from .solver import (
    Colorability,
    ColoringResult,
    ColoringStatus,
    KColoringResult,
    SearchBudget,
    chromatic_number,
    clique_lower_bound,
    greedy_bound,
    greedy_coloring,
    is_k_colorable,
    verify_coloring,
)

__all__ = [
    "Colorability",
    "ColoringResult",
    "ColoringStatus",
    "KColoringResult",
    "KstReport",
    "KstVerdict",
    "LocalChromaticResult",
    "SearchBudget",
    "chromatic_number",
    "clique_lower_bound",
    "greedy_bound",
    "greedy_coloring",
    "is_k_colorable",
    "kst_check",
    "kst_size_threshold",
    "local_chromatic",
    "verify_coloring",
]
