from .chern import ChernPoly, CotangentClass, chi_line, chi_schur_cotangent, schur_cotangent_class, schur_weights
from .euler import EulerReport, binomial, euler_det2, euler_report, euler_terms
from .oracles import P2_WEIGHTS, bott_chi_p2, chi_line_p2, euler_sequence_chi_p2
from .regularity import PRODUCT_MAX_N, RegularityMode, RegularityReport, regularity_bounds
from .surface import CANONICAL, LineBundle, SurfaceNumerics

__all__: list[str] = [
    "CANONICAL",
    "ChernPoly",
    "CotangentClass",
    "EulerReport",
    "LineBundle",
    "P2_WEIGHTS",
    "PRODUCT_MAX_N",
    "RegularityMode",
    "RegularityReport",
    "SurfaceNumerics",
    "binomial",
    "bott_chi_p2",
    "chi_line",
    "chi_line_p2",
    "chi_schur_cotangent",
    "euler_det2",
    "euler_report",
    "euler_terms",
    "euler_sequence_chi_p2",
    "regularity_bounds",
    "schur_cotangent_class",
    "schur_weights",
]
