from .complex import GradedComplex, KoszulComplex, exponent_tuples, koszul_homology, monomial_count
from .e1 import E1Term, diagonal_kernel_sign_trivial, e1_dataframe, e1_page
from .multitor import (
    KoszulFactor,
    MultitorFormula,
    expected_multitor_dims,
    multitor_formula,
    multitor_oracle,
    reduced_forms,
    total_koszul_complex,
)

__all__: list[str] = [
    "E1Term",
    "GradedComplex",
    "KoszulComplex",
    "KoszulFactor",
    "MultitorFormula",
    "diagonal_kernel_sign_trivial",
    "e1_dataframe",
    "e1_page",
    "expected_multitor_dims",
    "exponent_tuples",
    "koszul_homology",
    "monomial_count",
    "multitor_formula",
    "multitor_oracle",
    "reduced_forms",
    "total_koszul_complex",
]
