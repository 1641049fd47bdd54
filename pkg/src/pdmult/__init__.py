"""Exact PD multiplicity spaces, Bezout counts, Noether certificates and
Cayley-Bacharach rank analysis for pairs of plane curves over the rationals."""

from pdmult.errors import (
    CardinalityMismatch,
    CommonComponent,
    DegenerateLine,
    InfinityIntersection,
    MalformedInput,
    NotAnIntersectionPoint,
    NotHomogeneous,
    PDMultError,
    PreconditionFailed,
    ZeroPolynomial,
)
from pdmult.poly import (
    BivarPoly,
    Point,
    TrivarForm,
    apply_pd,
    dim_pi,
    divide_by_line,
    form_gcd,
    homogeneous_part,
    homogenize,
    leibniz_rhs,
    poly_gcd,
)
from pdmult.linalg import RationalMatrix, kernel_basis, rank, solve
from pdmult.multiplicity import (
    MultiplicitySpace,
    OperatorSystem,
    PDFunctional,
    arithmetical_multiplicity,
    check_d_invariance,
    condition_matrix,
    graded_basis,
    multiplicity_space,
)
from pdmult.intersection import (
    BezoutReport,
    IntersectionRecord,
    bezout_check,
    no_common_component,
    no_common_tangent,
    no_infinity_intersection,
    operator_system,
    rational_intersections,
)
from pdmult.noether import (
    DecompositionCertificate,
    NotInIdeal,
    VanishingReport,
    dim_w_formula,
    noether_decompose,
    vanishes_on,
    verify_dim_w,
)
from pdmult.interpolation import (
    CBReport,
    FunctionalSet,
    cayley_bacharach_analyze,
    classic_cb_check,
    evaluation_matrix,
    fundamental_polynomial,
    is_n_correct,
    is_n_independent,
)

__version__ = "0.1.0"
