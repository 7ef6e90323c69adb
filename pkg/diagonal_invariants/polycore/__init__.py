from .graded import GradedSpace, IdealSpace, IntersectionSpace, PolynomialSpace, QuotientSpace, guard_monomials, hilbert_function
from .groebner import buchberger, spoly
from .ideal import (
    Ideal,
    big_diagonal_ideal,
    diagonal_ideal,
    ideal_equal,
    ideal_intersection,
    ideal_intersection_all,
    ideal_power,
    ideal_product,
    ideal_sum,
    unit_ideal,
)
from .linalg import Vector, coordinates, determinant, independent_subset, nullspace, poly_vector, rank, tuple_vector
from .ring import GREVLEX, LEX, Monom, MonomialOrder, PolyRing
from .text import format_coefficient, format_polynomial, parse_polynomial

__all__: list[str] = [
    "GREVLEX",
    "LEX",
    "GradedSpace",
    "Ideal",
    "IdealSpace",
    "IntersectionSpace",
    "Monom",
    "MonomialOrder",
    "PolyRing",
    "PolynomialSpace",
    "QuotientSpace",
    "Vector",
    "big_diagonal_ideal",
    "buchberger",
    "coordinates",
    "determinant",
    "diagonal_ideal",
    "format_coefficient",
    "format_polynomial",
    "guard_monomials",
    "hilbert_function",
    "ideal_equal",
    "ideal_intersection",
    "ideal_intersection_all",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "independent_subset",
    "nullspace",
    "parse_polynomial",
    "poly_vector",
    "rank",
    "spoly",
    "tuple_vector",
    "unit_ideal",
]
