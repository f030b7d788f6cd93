"""Exact dimensions and certified bounds for trivariate splines on vertex stars.

Everything is computed over the rationals with zero tolerance: spline
space dimensions as exact kernel dimensions of smoothing-cofactor
systems, the closed-form bounds and degree thresholds they are checked
against, and the dual fat-point machinery (reduction vectors, Waldschmidt
bounds, Hilbert-function oracle) tying the two sides together.
"""

from .bounds import (
    BoundReport,
    d_gamma,
    euler_char_J,
    homog_lower_bound,
    homology_dims,
    lbcs,
    lbcs_closed_form,
    lbos,
    spline_lower_bound,
)
from .faceideals import (
    EdgeProfile,
    dim_J_gamma_exact,
    dim_J_sigma,
    dim_J_tau_exact,
    dim_J_tau_formula,
    edge_profile,
    face_form,
    face_forms,
    is_gamma_full,
)
from .fatpoints import (
    FatPointConfig,
    ReductionVector,
    alpha_bound,
    alpha_exact,
    canonical_reduction,
    cht_dim_bounds,
    chudnovsky_lower,
    dual_config,
    fatpoint_dim_exact,
    fullness_degree,
    greedy_sequence,
    is_full,
    reduce,
    waldschmidt_estimate,
    waldschmidt_lower,
)
from .linalg import ExactMatrix, Rational, kernel_dim, rank
from .splinedim import (
    CofactorSystem,
    build_system,
    generic_homog_dim,
    homog_dim,
    spline_dim,
    whiteley_check,
)
from .starmesh import (
    CATALOG_NAMES,
    StarGraph,
    VertexStar,
    build_star,
    catalog,
    face_counts,
    is_three_connected,
    load_star,
    parse_star_text,
    perturb,
    star_graph,
    star_to_text,
)

__version__ = "0.1.0"
