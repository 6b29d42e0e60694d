"""Twisted Gabidulin codes over small finite fields.

Construction of the one-, two- and many-twist families, every MRD / MDS /
AMDS / NMDS criterion with independent brute-force verification, and covering
radii with deep-hole certification.
"""

from .budget import Budgets, default_budgets
from .codes import (
    CodeSpec,
    DistanceReport,
    classify,
    encode,
    generator_matrix,
    min_hamming_distance,
    min_rank_distance,
    nmds_conditions,
)
from .covering import (
    CoveringReport,
    covering_bounds,
    covering_radius_exhaustive,
    deep_hole_family,
    deep_hole_via_extension,
    distance_to_code,
    is_deep_hole,
)
from .errors import (
    BudgetExceededError,
    ConsistencyError,
    FieldConstructionError,
    SpecInvariantError,
    TwistgabError,
)
from .fieldtower import (
    Element,
    FieldTower,
    TowerParams,
    default_tower,
    tower_build,
    tower_from_json,
    tower_to_json,
)
from .gcoeff import (
    AnnihilatorCoeffs,
    g_coefficient,
    g_of_subset,
    triangular_inverse,
    verify_modified_moore_identity,
)
from .linpoly import LinearizedPoly, annihilator, annihilator_product
from .moore import (
    det_fqm,
    modified_moore_matrix,
    moore_det_product,
    moore_matrix,
    rank_fqm,
)
from .mrdcheck import (
    ForbiddenSet,
    HammingClassification,
    SubfieldChain,
    construct_chain_mrd,
    enumerate_subspaces,
    forbidden_eta_set_one_twist,
    gaussian_binomial,
    hamming_class_via_omega,
    is_mrd_subspace_criterion,
    matrix_is_mrd,
    mrd_membership_multi,
    norm_mrd_condition,
    omega_ell_witness,
    omega_one,
    omega_one_prime,
    omega_two_witness,
    omega_witness,
    sum_product_free_test,
)

__version__ = "0.1.0"

__all__ = [
    "AnnihilatorCoeffs",
    "BudgetExceededError",
    "Budgets",
    "CodeSpec",
    "ConsistencyError",
    "CoveringReport",
    "DistanceReport",
    "Element",
    "FieldConstructionError",
    "FieldTower",
    "ForbiddenSet",
    "LinearizedPoly",
    "SpecInvariantError",
    "SubfieldChain",
    "TowerParams",
    "TwistgabError",
    "annihilator",
    "annihilator_product",
    "classify",
    "construct_chain_mrd",
    "covering_bounds",
    "covering_radius_exhaustive",
    "deep_hole_family",
    "deep_hole_via_extension",
    "default_budgets",
    "default_tower",
    "det_fqm",
    "distance_to_code",
    "encode",
    "enumerate_subspaces",
    "forbidden_eta_set_one_twist",
    "g_coefficient",
    "g_of_subset",
    "gaussian_binomial",
    "generator_matrix",
    "hamming_class_via_omega",
    "HammingClassification",
    "is_deep_hole",
    "is_mrd_subspace_criterion",
    "matrix_is_mrd",
    "min_hamming_distance",
    "min_rank_distance",
    "modified_moore_matrix",
    "moore_det_product",
    "moore_matrix",
    "mrd_membership_multi",
    "nmds_conditions",
    "norm_mrd_condition",
    "omega_ell_witness",
    "omega_one",
    "omega_one_prime",
    "omega_two_witness",
    "omega_witness",
    "rank_fqm",
    "sum_product_free_test",
    "tower_build",
    "tower_from_json",
    "tower_to_json",
    "triangular_inverse",
    "verify_modified_moore_identity",
]
