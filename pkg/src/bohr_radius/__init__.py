"""Sharp Bohr radii for four classes of analytic functions on the unit disk.

The radius of a class is the largest r such that the coefficient-bound
majorant of every member stays within the distance from the origin to the
image boundary.  This package evaluates the majorants (Bessel-type,
hypergeometric and rational kernels), solves the monotone radius equations,
reproduces the five reference tables and cross-checks sharpness numerically.
"""

from .classes import (
    AlphaConvex,
    AlphaConvexBounds,
    ClassSpec,
    Janowski,
    SecondOrder,
    TypicallyReal,
    c_coeff,
    coeff_bound_alpha_convex,
    coeff_bound_janowski,
    coeff_bound_second_order,
    coeff_bound_tr,
    distance_bound,
    extremal_coeffs,
    growth_l,
    upsilon,
)
from .errors import (
    BohrRadiusError,
    CostGuard,
    DomainError,
    NoRootInInterval,
    QuadratureFailure,
    TruncationFailure,
)
from .solver import (
    Area,
    PhiSpec,
    PowerP,
    RadiusProblem,
    RadiusResult,
    Refined,
    closed_form_starlike_alpha,
    deficiency,
    majorant,
    solve_radius,
)
from .special import (
    DEFAULT_CONFIG,
    SeriesConfig,
    bessel_j0,
    bessel_j0_weighted,
    gauss_2f1,
    k_minus_one,
    sum_n2_tail,
    sum_n3_full,
)
from .verify import (
    BlaschkeTwist,
    CheckReport,
    Monomial,
    ScaledIdentity,
    SchwarzSpec,
    check_alpha_convex_dual,
    check_schwarz_end_to_end,
    check_series_identities,
    check_sharpness,
    default_suite,
    schwarz_value,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaConvex",
    "AlphaConvexBounds",
    "Area",
    "BlaschkeTwist",
    "BohrRadiusError",
    "CheckReport",
    "ClassSpec",
    "CostGuard",
    "DEFAULT_CONFIG",
    "DomainError",
    "Janowski",
    "Monomial",
    "NoRootInInterval",
    "PhiSpec",
    "PowerP",
    "QuadratureFailure",
    "RadiusProblem",
    "RadiusResult",
    "Refined",
    "ScaledIdentity",
    "SchwarzSpec",
    "SecondOrder",
    "SeriesConfig",
    "TruncationFailure",
    "TypicallyReal",
    "bessel_j0",
    "bessel_j0_weighted",
    "c_coeff",
    "check_alpha_convex_dual",
    "check_schwarz_end_to_end",
    "check_series_identities",
    "check_sharpness",
    "closed_form_starlike_alpha",
    "coeff_bound_alpha_convex",
    "coeff_bound_janowski",
    "coeff_bound_second_order",
    "coeff_bound_tr",
    "default_suite",
    "deficiency",
    "distance_bound",
    "extremal_coeffs",
    "gauss_2f1",
    "growth_l",
    "k_minus_one",
    "majorant",
    "schwarz_value",
    "solve_radius",
    "sum_n2_tail",
    "sum_n3_full",
    "upsilon",
]
