"""Exact local-finiteness toolkit for the genus-one curve graphs."""

from .annular import Annulus, TwistCoord, annular_distance, projects, twist_coord
from .bounds import (
    BigBound,
    BoundParams,
    Surface,
    complexity,
    growth_upper,
    n_bound,
    slice_bound_tight,
    slice_bound_weak,
)
from .errors import (
    DisconnectedQuery,
    EmptyProjection,
    HypothesisViolation,
    PreconditionViolation,
)
from .farey import (
    INFINITY,
    Geodesic,
    MobiusMap,
    Slope,
    SurfaceKind,
    adjacent,
    apply,
    canonical,
    dehn_twist,
    distance,
    geodesics,
    half_twist,
    intersection,
    link_at_distance,
    normalizer_to_infinity,
    pivot_candidates,
)
from .graphcore import (
    BallCoverCertificate,
    FiniteGraph,
    SeparatedWitness,
    check_ulfp_theorem,
    greedy_separated,
    ulf_bound,
)
from .projections import (
    PropertyPReport,
    SubsurfaceRef,
    UlfpCertificate,
    WHOLE,
    annular_ref,
    bgit_audit,
    candidate_subsurfaces,
    check_P,
    check_P_all,
    lemma_co_construct,
    proj_distance,
    ulfp_witness,
)
from .slices import (
    SampledSlice,
    SliceQuery,
    WeakTightReport,
    radius_slice_sample,
    tight_slice,
    verify_slice_bounds,
    weak_tight_index,
    weak_tight_slice,
)

__all__ = [name for name in dir() if not name.startswith("_")]
