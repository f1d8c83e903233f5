"""Finite-model variational principles: maximal elements, pseudometric families
and certified Ekeland-type points, all with exact rational arithmetic."""
from .errors import (
    FangError,
    InvalidScaling,
    KindMismatch,
    NotAntisymmetric,
    NotITriangular,
    NotReflexive,
    NotTransitive,
    ParseError,
    PassInapplicable,
    PreconditionViolated,
    SuccessorMissing,
    UnknownCheck,
)
from .order_core import (
    Carrier,
    EventuallyPeriodicSeq,
    Objective,
    QuasiOrder,
    Relation,
    bb_maximal,
    bb_trajectory,
    beta,
    dependent_chain,
    inf_lattice_check,
    is_decreasing,
    is_phi_maximal,
    is_quasi_order,
    up_set,
    zorn_check,
)
from .pseudometric import (
    FamilyReport,
    IndexPoset,
    PseudometricFamily,
    ScalingMap,
    bmlo_to_fang,
    rescale,
    sup_reduction,
    validate_family,
)
from .rational import INF
from .structures import (
    EntourageSystem,
    SeqVerdict,
    canonical_entourages,
    check_selfclosed,
    converges,
    is_asymptotic,
    is_cauchy,
    is_compatible,
    is_fundamental_system,
    maximal_transfer_check,
)
from .variational import (
    Certificate,
    VariationalInstance,
    brondsted_order,
    ekeland_point,
    family_order,
    fang_point,
    gap_compatibility,
    hamel_point,
    metric_reduction,
    verify_certificate,
)
from .discrete_evp import MetricInstance, evpdlc_check, is_discrete, is_nonexpansive

__version__ = "0.1.0"
