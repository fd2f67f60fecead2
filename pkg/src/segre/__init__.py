"""Exact-arithmetic toolkit for rank-2 bundles on the projective plane.

Closed-form calculators for the Segre-invariant stratification and
Brill-Noether loci of the moduli space, a Serre-extension bundle model with
exact twisted section counts over Q or F_p, randomized witness generators,
and rank-based oracle verifiers for every dimension formula.
"""

from .bundles import (
    ExtensionBundle,
    SegreResult,
    bundle_from_json,
    cayley_bacharach,
    chern,
    h0_twist,
    is_locally_free,
    is_stable,
    segre_invariant,
)
from .brillnoether import (
    BNReport,
    bn_dim_lower_bound,
    bn_nonempty_t,
    bn_report,
    certified_section_count,
    rho,
    rho_crossover_c2,
    stratum_min_sections,
    weak_bn_check,
)
from .errors import (
    ConsistencyError,
    CounterexampleError,
    InvalidParameterError,
    RetryExhausted,
)
from .fields import QQ, PrimeField, RationalField, field_from_json, is_prime
from .harness import (
    VerificationReport,
    verify_formula_ext1,
    verify_formula_fiber,
    verify_lemma_tool,
    verify_stratum_dim,
    verify_weak_bn,
)
from .linalg import ExactMatrix, kernel_basis, rank, rref
from .plane import (
    PlaneCurve,
    PlanePoint,
    ZeroCycle,
    curve_through,
    evaluation_matrix,
    h0_ideal,
    h1_ideal,
    monomial_basis,
    monomial_count,
    on_curve,
    point_from_index,
    points_on_curve,
    projective_point_count,
    zero_cycle_from_json,
)
from .rng import RngState, derive_seed, mix64
from .strata import (
    ChernData,
    StratumReport,
    admissible_invariants,
    is_admissible,
    max_admissible_k,
    moduli_dim,
    normalize_chern,
    open_stratum,
    stratum_dim,
    stratum_dim_branch,
)
from .witness import (
    DEFAULT_PRIME,
    DEFAULT_RETRIES,
    BoundaryProbeReport,
    WitnessReport,
    below_boundary_probe,
    bn_witness,
    default_field,
    random_cycle,
    random_point,
    stratum_witness,
    witness_report_from_json,
)

__version__ = "0.1.0"
