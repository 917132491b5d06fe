"""Exact degenerations of affine varieties along irrational torus directions."""

from .errors import TorusDegenError
from .groebner import (
    GrevlexOrder,
    Polynomial,
    WeightOrder,
    buchberger,
    compare_monomials,
    groebner_cone,
    hilbert_function,
    initial_ideal,
    monomial_weight,
    parse_polynomial,
)
from .kernels import BACKEND
from .novikov import (
    INFINITY,
    GammaMonoid,
    NovikovSeries,
    RingDesc,
    extend_ring,
    graded_generators,
    pairing_value,
    series_arith,
    series_valuation,
)
from .polyhedra import (
    RationalCone,
    TorusAction,
    WallPoint,
    WeightVectorXi,
    certify_irrational,
    cone_contains,
    dual_cone,
    envelope_breakpoints,
    hilbert_basis,
)
from .reduction import (
    ArcClass,
    ArcFamily,
    ReductionStep,
    StrataSpec,
    Stratification,
    StratumEntry,
    attractor_locus,
    check_rational_approx,
    classify_arc,
    critical_scale,
    elementary_modification,
    iterate_reduction,
    limit_along,
    semistable_reduce,
)
from .scalars import Order, QuadExtScalar, Sign, qx, qx_arith, qx_compare, qx_sign, qx_to_interval
from .testconfig import (
    GeneralizedTestConfig,
    OneParamTestConfig,
    canonical_degeneration,
    family_fiber,
    orbit_closure_family,
    rational_restriction,
)

__version__ = "0.1.0"
