"""Verification toolkit for 2-hook counting biases in regular partitions."""

__version__ = "0.1.0"

from .partitions import (  # noqa: E402,F401
    DomainError,
    HookProfile,
    NotInImageError,
    ParseError,
    Partition,
    b_t_k,
    enumerate_partitions,
    hook_count_totals,
)
from .series import (  # noqa: F401
    DEFAULT_DEGREE,
    TruncatedSeries,
    bt2_series,
    decomposition_sum,
    decomposition_term,
    geometric,
    pochhammer,
    regular_series,
    verify_decomposition,
)
from .opo import (  # noqa: F401
    OPOOverpartition,
    SetId,
    enumerate_opo,
    enumerate_set,
    g,
    parse,
    set_cardinality,
    set_cardinality_vs_series,
    set_membership,
    t_adic_factor,
)
from .maps import (  # noqa: F401
    MapId,
    MapTrace,
    apply_part_map,
    eta1,
    eta3,
    phi1,
    phi2,
    phi3,
    psi1,
    psi2,
    psi3,
    verify_conjecture,
    verify_image_disjointness,
    verify_map,
    zeta1,
    zeta2,
    zeta2_inv,
    zeta3,
)
from .report import VerificationReport  # noqa: F401
