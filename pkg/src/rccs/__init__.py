"""Exact-arithmetic toolkit for Reichenbachian common cause systems.

Two classical event models (atomless interval events on the unit
interval and finite weighted spaces), the structural predicates that
connect them (compatibility, logical independence, correlation), a
verification and construction engine for common cause systems of size 2
and 3, an exhaustive finite-space search, and a numeric Bell-inequality
witness showing why no single system can serve all observable pairs at
once.
"""

from .bell import (
    BellWitness,
    basis_product_state,
    bell_expectations,
    bell_value,
    build_witness,
    classical_bound_check,
    commutator_norm,
    is_partial_isometry,
    is_projection,
    no_common_ccs_demo,
)
from .engine import (
    CommonCauseSystem,
    ConstructionSteps,
    VerificationReport,
    construct_size3,
    construction_steps,
    correlation_decomposition,
    verify_common_cause,
    verify_rccs,
)
from .errors import InputError, InternalInvariantError, PreconditionError, RccsError
from .events import EMPTY, FULL, IntervalEvent, as_fraction
from .finite import (
    DEFAULT_MAX_POINTS,
    FiniteEvent,
    FiniteSpace,
    enumerate_partitions,
    finite_measure,
    search_rccs,
)
from .lattice import (
    LatticeEvent,
    Partition,
    check_product_inequality,
    compatible,
    correlation,
    logical_independence_equiv,
    logically_independent,
)

__version__ = "0.1.0"

__all__ = [
    "BellWitness",
    "CommonCauseSystem",
    "ConstructionSteps",
    "DEFAULT_MAX_POINTS",
    "EMPTY",
    "FULL",
    "FiniteEvent",
    "FiniteSpace",
    "InputError",
    "InternalInvariantError",
    "IntervalEvent",
    "LatticeEvent",
    "Partition",
    "PreconditionError",
    "RccsError",
    "VerificationReport",
    "as_fraction",
    "basis_product_state",
    "bell_expectations",
    "bell_value",
    "build_witness",
    "check_product_inequality",
    "classical_bound_check",
    "commutator_norm",
    "compatible",
    "construct_size3",
    "construction_steps",
    "correlation",
    "correlation_decomposition",
    "enumerate_partitions",
    "finite_measure",
    "is_partial_isometry",
    "is_projection",
    "logical_independence_equiv",
    "logically_independent",
    "no_common_ccs_demo",
    "search_rccs",
    "verify_common_cause",
    "verify_rccs",
]
