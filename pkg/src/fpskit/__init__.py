"""Exact formal power series toolkit.

Reversion of series with exact rational or polynomial coefficients,
inverse/binomial/Hankel transforms, Jacobi continued fractions, the
inversion-to-reversion deformation group, and exhaustive combinatorial
oracles (Lukasiewicz words, Motzkin paths, plane and binary trees) that
cross-check the algebra.
"""

from .deformation import (
    UnitDiffeoPair,
    integral_variant_path,
    inversion_reversion_path,
    pair_inv,
    pair_mul,
    power_coupled_pair,
)
from .reversion import (
    TruncationLadder,
    build_ladder,
    composition_matrix,
    fixed_point_series,
    iterate_interpolation,
    ladder_generating_sides,
    reversion_coefficient,
    reversion_identity_sides,
)
from .rings import Matrix, MultiPoly, Rational, det, format_rational, parse_rational
from .series import TruncatedSeries, letter_series
from .transforms import (
    HankelSpec,
    JFraction,
    binomial_transform,
    dodgson_check,
    hankel_det,
    hankel_transform,
    inverse_transform,
    inverse_transform_symbolic,
    jfraction_contract,
    jfraction_expand,
    principal_minor_product,
)

__all__ = [
    "HankelSpec",
    "JFraction",
    "Matrix",
    "MultiPoly",
    "Rational",
    "TruncatedSeries",
    "TruncationLadder",
    "UnitDiffeoPair",
    "binomial_transform",
    "build_ladder",
    "composition_matrix",
    "det",
    "dodgson_check",
    "fixed_point_series",
    "format_rational",
    "hankel_det",
    "hankel_transform",
    "integral_variant_path",
    "inverse_transform",
    "inverse_transform_symbolic",
    "inversion_reversion_path",
    "iterate_interpolation",
    "jfraction_contract",
    "jfraction_expand",
    "ladder_generating_sides",
    "letter_series",
    "pair_inv",
    "pair_mul",
    "parse_rational",
    "power_coupled_pair",
    "principal_minor_product",
    "reversion_coefficient",
    "reversion_identity_sides",
]
