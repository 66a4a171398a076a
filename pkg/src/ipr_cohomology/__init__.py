"""Exact graded Lie algebra cohomology of parabolic nilradicals and derived invariants."""
from .ce_oracle import build_lie_structure, ce_cohomology_dims
from .kostant import CohomologyTable, cohomology_table, mu, nu, vhs_set
from .layout import ResolutionConditionError, double_complex, resolution_shape
from .root_system import CartanType, RootSystem, root_system
from .schubert_cc import HomologyClass, betti_numbers, cc_dual_report, vhs_representable
from .weyl import ParabolicSpec, WeylElement, WeylGroupTooLarge, minimal_coset_reps

__all__ = [
    "CartanType",
    "CohomologyTable",
    "HomologyClass",
    "ParabolicSpec",
    "ResolutionConditionError",
    "RootSystem",
    "WeylElement",
    "WeylGroupTooLarge",
    "betti_numbers",
    "build_lie_structure",
    "cc_dual_report",
    "ce_cohomology_dims",
    "cohomology_table",
    "double_complex",
    "minimal_coset_reps",
    "mu",
    "nu",
    "resolution_shape",
    "root_system",
    "vhs_representable",
    "vhs_set",
]
