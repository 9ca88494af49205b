"""Conflict-avoiding and strongly conflict-avoiding codes of weight three:
construction, verification, bounds, exact search and channel simulation."""

from .bounds import BoundResult, m_cac_exact, ms_exact, ms_upper, ms_upper_legacy
from .channel import simulate, worst_case_sigma
from .construct import (
    build_graph,
    classify_odd_length,
    double_code,
    leave2_exists,
    m_e_with_witness,
    n_odd,
    orders,
    tight_exists,
)
from .ring import Codeword, classify, decompose, difference_profile, equi_codeword
from .search import enumerate_classes, max_code
from .validate import Code, gap_bound_check, is_cac, is_scac, leave, solitary_gaps

__all__ = [
    "BoundResult",
    "Code",
    "Codeword",
    "build_graph",
    "classify",
    "classify_odd_length",
    "decompose",
    "difference_profile",
    "double_code",
    "enumerate_classes",
    "equi_codeword",
    "gap_bound_check",
    "is_cac",
    "is_scac",
    "leave",
    "leave2_exists",
    "m_cac_exact",
    "m_e_with_witness",
    "max_code",
    "ms_exact",
    "ms_upper",
    "ms_upper_legacy",
    "n_odd",
    "orders",
    "simulate",
    "solitary_gaps",
    "tight_exists",
    "worst_case_sigma",
]
