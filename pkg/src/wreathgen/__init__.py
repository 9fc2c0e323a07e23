"""Minimal generator counts of iterated wreath products.

Closed-form evaluation (`d_tower`, `d_corollary`) with independent
certification: permutation-group algorithms (`permcore`), modular
representation and cohomology computations (`modfp`), and brute-force
generation oracles (`oracle`).
"""

from .permcore import (
    ConsistencyError,
    DegreeMismatch,
    ParseError,
    PermGroup,
    Permutation,
    abelian_p_rank,
    abelian_p_ranks,
    bsgs_build,
    derived_subgroup,
    enumerate_elements,
    format_cycles,
    parse_cycles,
)
from .wreath import (
    GroupSpec,
    TowerSpec,
    TreeAutomorphism,
    TrivialLevelError,
    apply_at_vertex,
    example_generators,
    example_tower,
    parse_group,
    parse_tower,
    standard_generators,
    tower_generators,
    tower_group,
)
from .formula import (
    AbelianProfile,
    CountingProfile,
    CyclicTopError,
    FormulaResult,
    abelianization,
    counting_profile,
    d_abelian_wreath,
    d_corollary,
    d_tower,
)
from .modfp import (
    CohomReport,
    FpModule,
    IpReport,
    NonScalarEndomorphism,
    check_Ip_structure,
    cocycle_dims,
    h_param,
    s_param,
)
from .oracle import (
    CayleyTable,
    GenResult,
    GenSearchConfig,
    OrderLimitExceeded,
    d_lower_bound,
    exhaustive_nongeneration,
    find_generating_tuple,
    is_cyclic,
    min_generators,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianProfile", "CayleyTable", "CohomReport", "ConsistencyError",
    "CountingProfile", "CyclicTopError", "DegreeMismatch", "FormulaResult",
    "FpModule", "GenResult", "GenSearchConfig", "GroupSpec", "IpReport",
    "NonScalarEndomorphism", "OrderLimitExceeded", "ParseError", "PermGroup",
    "Permutation", "TowerSpec", "TreeAutomorphism", "TrivialLevelError",
    "abelian_p_rank", "abelian_p_ranks", "abelianization", "apply_at_vertex",
    "bsgs_build", "check_Ip_structure", "cocycle_dims", "counting_profile",
    "d_abelian_wreath", "d_corollary", "d_lower_bound", "d_tower",
    "derived_subgroup", "enumerate_elements", "example_generators",
    "example_tower", "exhaustive_nongeneration", "find_generating_tuple",
    "format_cycles", "h_param", "is_cyclic", "min_generators", "parse_cycles",
    "parse_group", "parse_tower", "s_param", "standard_generators",
    "tower_generators", "tower_group",
]
