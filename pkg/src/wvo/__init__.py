"""Exact weak vector optimization over polyhedral cones.

Conjugate-epigraph oracles, multiplier certificates, Farkas-type audits and
duality checks for affine vector problems, all in rational arithmetic.
"""

from .cone import Cone, cone_contains, cone_interior_contains, dual_cone, validate_ordering_cone
from .conjugate import Verdict, epi_member, epi_member_shifted, representation_equality_check
from .errors import (
    DimensionError,
    PlotUnavailable,
    PreconditionError,
    QualificationError,
    SchemaError,
    TheoremViolation,
    UnsupportedDimension,
    WVOError,
)
from .farkas import FarkasQuery, check_b1, check_b2, check_b3, equivalence_audit, search_T
from .multipliers import (
    Certificate,
    QualificationReport,
    build_certificate,
    check_ri_condition,
    check_slater,
    find_separating_functional,
    lift_multiplier,
    qualification,
    solve_scalar_dual,
    verify_certificate,
)
from .optimality import (
    DualPoint,
    certify_weak_min,
    check_condition_f,
    check_condition_g,
    check_condition_i,
    check_condition_j,
    dvop_feasible,
    is_weak_solution,
    strong_duality_check,
)
from .order import (
    PointSet,
    WSupResult,
    classify_dom,
    in_L_plus,
    in_L_plus_weak,
    smax,
    wmax,
    wmin,
    wsup_cone_image,
    wsup_finite,
    wsup_finite_contains,
)
from .problem import Polyhedron, Problem, VectorAffineMap

__version__ = "0.1.0"
