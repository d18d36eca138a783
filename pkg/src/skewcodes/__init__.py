"""Skew constacyclic codes over Z_q and Z_q + uZ_q and their Gray images."""

from .rings import (
    Automorphism,
    MixedWord,
    RingElem,
    RingParams,
    apply_theta,
    eta,
    make_automorphism,
    mixed_inner_product,
    relem_mul,
    star_mul,
    valid_automorphisms,
)
from .skewpoly import (
    SkewPoly,
    is_binomial_central,
    is_central,
    right_divisor_pairs,
    skew_left_divide,
    skew_mul,
    skew_right_divide,
)
from .graymaps import GrayVariant, gray_phi, gray_psi, lee_weight, qt_closed
from .rcodes import RCode, RCodeSpec, brute_dual_r, build_rcode, consta_shift
from .zqrcodes import (
    DoubleSpec,
    MixedCode,
    MixedCodeSpec,
    brute_dual_mixed,
    build_double_code,
    build_mixed_code,
    build_spanning_code,
    generator_from_parity,
    mixed_shift,
    poly_scalar_action,
    separable_product,
    spanning_rows,
)
from .zqlinalg import GenMatrix, code_type, enumerate_codewords, howell_form, min_lee_distance
from .search import FoundCode, SearchJob, reproduce_table1, run_search

__version__ = "0.1.0"
