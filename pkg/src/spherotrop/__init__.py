"""Exact tropical and spherical-tropical geometry over Puiseux series."""

from .amoeba import (
    AmoebaCloud,
    LimitReport,
    amoeba_sample,
    snf_svd_limit_check,
    spherical_log,
    svd_values,
)
from .errors import (
    ConstantPolynomial,
    CurveNotOnVariety,
    DegeneratePoint,
    DimensionTooLarge,
    DivisionByZero,
    InputError,
    InvalidPoint,
    NoConvergence,
    NonGenericWarning,
    OrderNotWellFounded,
    PrecisionLoss,
    RankMismatch,
    SingularMatrix,
    SpherotropError,
    UnsupportedHypersurface,
    ZeroPolynomial,
)
from .exact import T, PuiseuxSeries, series
from .fan import (
    Fan,
    groebner_cone,
    groebner_fan_enumerate,
    initial_ideal_any,
    initial_ideal_weight,
    newton_polytope,
    normal_fan,
)
from .poly import (
    GREVLEX,
    Polynomial,
    TermOrder,
    buchberger_reduced,
    is_groebner_basis,
    poly_divide,
    s_polynomial,
)
from .polyhedral import Cone, Polyhedron
from .snf import (
    SeriesMatrix,
    invariant_factors_elimination,
    invariant_factors_minors,
    ord_det,
)
from .sph_trop import (
    ANGLE_R1_R2,
    R1,
    R2,
    Cone2Set,
    RaySet1D,
    curve_sampling_trop,
    gl2_borel_trop,
    sl2_initial_and_unit,
    sl2_spherical_fan,
    sl2_spherical_gb,
    sl2_trop_hypersurface,
)
from .spherical import (
    SphericalModel,
    ValuationCone,
    cone_membership,
    model_tropicalize,
    sumihiro_estimate,
)
from .tropical import (
    TorusIdeal,
    TropicalSet,
    fundamental_check,
    trop_hypersurface,
    trop_membership,
    trop_point,
)

__version__ = "0.1.0"
