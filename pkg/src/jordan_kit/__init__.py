"""Jordan constants of finite groups, closed-form bound tables, and theorem checks."""
from .analysis import (
    AnalysisReport,
    SubgroupClass,
    enumerate_normal_subgroups,
    enumerate_subgroup_classes,
    jordan_constant,
    min_abelian_index,
    min_normal_abelian_index,
)
from .bounds import BoundEntry, collins_value, minkowski_bound, symmetric_lower_bound
from .constructions import (
    GroupSpec,
    ZarhinParams,
    abelian,
    alternating,
    binary_icosahedral,
    cyclic,
    dihedral,
    from_spec,
    quaternion,
    standard_family,
    symmetric,
    zarhin_group,
    zarhin_index,
)
from .errors import (
    CapExceededError,
    CenterNotTrivialError,
    JordanKitError,
    NotApplicableError,
    NotTabulatedError,
    SpecError,
)
from .group import (
    FiniteGroup,
    GroupHomomorphism,
    Permutation,
    SubgroupSet,
    are_isomorphic,
    automorphism_group,
    close_generators,
    direct_product,
    find_isomorphism,
    intersect_conjugates,
    matrix_group_over_prime_field,
    normal_core,
    quotient_group,
    semidirect_product,
    structure_report,
)
from .theorems import (
    CheckRecord,
    check_centerless_bound,
    check_core_bound,
    check_extension_bound,
    check_gs_bounds,
    check_zarhin_property,
    default_corpus,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BoundEntry",
    "collins_value",
    "minkowski_bound",
    "symmetric_lower_bound",
    "AnalysisReport",
    "CapExceededError",
    "CenterNotTrivialError",
    "CheckRecord",
    "FiniteGroup",
    "GroupHomomorphism",
    "GroupSpec",
    "JordanKitError",
    "NotApplicableError",
    "NotTabulatedError",
    "Permutation",
    "SpecError",
    "SubgroupClass",
    "SubgroupSet",
    "ZarhinParams",
    "abelian",
    "alternating",
    "are_isomorphic",
    "automorphism_group",
    "binary_icosahedral",
    "check_centerless_bound",
    "check_core_bound",
    "check_extension_bound",
    "check_gs_bounds",
    "check_zarhin_property",
    "close_generators",
    "cyclic",
    "default_corpus",
    "dihedral",
    "direct_product",
    "enumerate_normal_subgroups",
    "enumerate_subgroup_classes",
    "find_isomorphism",
    "from_spec",
    "intersect_conjugates",
    "jordan_constant",
    "matrix_group_over_prime_field",
    "min_abelian_index",
    "min_normal_abelian_index",
    "normal_core",
    "quaternion",
    "quotient_group",
    "run_suite",
    "semidirect_product",
    "standard_family",
    "structure_report",
    "symmetric",
    "zarhin_group",
    "zarhin_index",
]
