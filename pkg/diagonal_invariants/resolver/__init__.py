from .calculus import diagonal_adapted_basis, dx_monomials, point_differential, point_polynomials, substitute_points, taylor_part
from .complexes import MapComplex, ShiftedComplex, exact_l211_sequence, prop211_complex, resolution_complex
from .exactness import DegreeSummary, ExactnessReport, ExactnessRow, degree_rows, exactness_check
from .ideal_checks import ASSERTED, PARAMETERS, SUPPORTED, IdealComparison, compare_degree, comparison_dataframe, comparison_spaces, ideal_check
from .maps import (
    C_WEIGHTS,
    DiagonalData,
    InvariantMap,
    SymmetricQuotient,
    TaylorDifferential,
    atilde_kills_restrictions,
    atilde_matches_D,
    form_coefficients,
    map_A,
    map_Atilde,
    map_C,
    map_d1,
    map_D,
    map_dlDelta,
    map_r,
    sample_polynomial,
    stabilizer_of,
    symmetric_quotient,
    twisted_kernel_dimension,
    twisted_reference_dimension,
)
from .modules import Element, InvariantModule, combine, element_vector, is_zero, kernel_elements

__all__: list[str] = [
    "ASSERTED",
    "C_WEIGHTS",
    "DegreeSummary",
    "DiagonalData",
    "Element",
    "ExactnessReport",
    "ExactnessRow",
    "IdealComparison",
    "InvariantMap",
    "InvariantModule",
    "MapComplex",
    "PARAMETERS",
    "SUPPORTED",
    "ShiftedComplex",
    "SymmetricQuotient",
    "TaylorDifferential",
    "atilde_kills_restrictions",
    "atilde_matches_D",
    "combine",
    "compare_degree",
    "comparison_dataframe",
    "comparison_spaces",
    "degree_rows",
    "diagonal_adapted_basis",
    "dx_monomials",
    "element_vector",
    "exact_l211_sequence",
    "exactness_check",
    "form_coefficients",
    "ideal_check",
    "is_zero",
    "kernel_elements",
    "map_A",
    "map_Atilde",
    "map_C",
    "map_D",
    "map_d1",
    "map_dlDelta",
    "map_r",
    "point_differential",
    "point_polynomials",
    "prop211_complex",
    "resolution_complex",
    "sample_polynomial",
    "stabilizer_of",
    "substitute_points",
    "symmetric_quotient",
    "taylor_part",
    "twisted_kernel_dimension",
    "twisted_reference_dimension",
]
