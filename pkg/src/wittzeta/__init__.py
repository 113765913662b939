"""Exact arithmetic in the big Witt ring, sigma-operations, zeta series
of motivic measures, and machine checks of the identities tying them
together, with point counting over finite fields as the ground truth.
"""

from .counting import (
    closed_point_census,
    count_points,
    field_params_from_q,
    moebius,
    point_counts,
    resolve_field,
    sym_product_counts,
)
from .errors import (
    BudgetExceeded,
    CensusInconsistent,
    NonIntegral,
    NotPrime,
    NotRationalAtBound,
    ParseError,
    PrecisionTooLow,
    TorsionUnsupported,
    UnsupportedClass,
    UnvaluedAtom,
    WittzetaError,
)
from .finitefield import GF, make_field
from .measures import (
    Measure,
    as_k0,
    atom_value,
    counting_measure,
    euler_atom,
    euler_measure,
    lefschetz_power,
    measure_value,
    poincare_atom,
    poincare_measure,
)
from .parsing import parse_poly
from .rational import (
    RatWitt,
    rat_add,
    rat_equal,
    rat_expand,
    rat_make,
    rat_mul,
    rat_neg,
    rat_star,
    rat_zero,
    rationalize,
)
from .rings import QQ, ZZ, int_poly_ring, poly_ring
from .series import TruncSeries
from .sigma import (
    BINOMIAL_Z,
    PLETHYSTIC_ZU,
    ZU,
    SigmaStructure,
    check_lambda_additivity,
    check_sigma_ring_hom,
)
from .varieties import (
    K0Class,
    SymbolicAtom,
    VarietyDesc,
    affine_space,
    affine_variety,
    atom_product,
    elliptic_f5,
    k0_add,
    k0_atom,
    k0_mul,
    k0_neg,
    k0_scale,
    load_variety,
    multiplicative_group,
    point,
    projective_space,
    projective_variety,
    variety_product,
)
from .verdict import Verdict, compare_series
from .witt import (
    from_ghost,
    ghost,
    lambda_involution,
    teichmuller,
    twist,
    witt_add,
    witt_mul,
    witt_neg,
    witt_pow,
    witt_sub,
    witt_unit,
    witt_zero,
)
from .zeta import (
    ZetaSeries,
    bundle_zeta_check,
    check_exponentiation,
    g_witt_identity_check,
    kapranov_zeta,
    product_rationality,
    totaro_check,
    totaro_proof_trace,
    weil_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "BINOMIAL_Z",
    "BudgetExceeded",
    "CensusInconsistent",
    "GF",
    "K0Class",
    "Measure",
    "NonIntegral",
    "NotPrime",
    "NotRationalAtBound",
    "PLETHYSTIC_ZU",
    "ParseError",
    "PrecisionTooLow",
    "QQ",
    "RatWitt",
    "SigmaStructure",
    "SymbolicAtom",
    "TorsionUnsupported",
    "TruncSeries",
    "UnsupportedClass",
    "UnvaluedAtom",
    "VarietyDesc",
    "Verdict",
    "WittzetaError",
    "ZU",
    "ZZ",
    "ZetaSeries",
    "affine_space",
    "affine_variety",
    "as_k0",
    "atom_product",
    "atom_value",
    "bundle_zeta_check",
    "check_exponentiation",
    "check_lambda_additivity",
    "check_sigma_ring_hom",
    "closed_point_census",
    "compare_series",
    "count_points",
    "counting_measure",
    "elliptic_f5",
    "euler_atom",
    "euler_measure",
    "field_params_from_q",
    "from_ghost",
    "g_witt_identity_check",
    "ghost",
    "int_poly_ring",
    "k0_add",
    "k0_atom",
    "k0_mul",
    "k0_neg",
    "k0_scale",
    "kapranov_zeta",
    "lambda_involution",
    "lefschetz_power",
    "load_variety",
    "make_field",
    "measure_value",
    "moebius",
    "multiplicative_group",
    "parse_poly",
    "point",
    "point_counts",
    "poincare_atom",
    "poincare_measure",
    "poly_ring",
    "product_rationality",
    "projective_space",
    "projective_variety",
    "rat_add",
    "rat_equal",
    "rat_expand",
    "rat_make",
    "rat_mul",
    "rat_neg",
    "rat_star",
    "rat_zero",
    "rationalize",
    "resolve_field",
    "sym_product_counts",
    "teichmuller",
    "totaro_check",
    "totaro_proof_trace",
    "twist",
    "variety_product",
    "weil_zeta",
    "witt_add",
    "witt_mul",
    "witt_neg",
    "witt_pow",
    "witt_sub",
    "witt_unit",
    "witt_zero",
]
