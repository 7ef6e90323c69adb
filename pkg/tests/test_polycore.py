from functools import reduce

import pytest
from sympy.polys.domains import QQ

from diagonal_invariants import ComputationTooLargeException, RingMismatchException, UnsupportedSizeException, get_settings
from diagonal_invariants.polycore import (
    LEX,
    Ideal,
    IdealSpace,
    IntersectionSpace,
    PolyRing,
    PolynomialSpace,
    QuotientSpace,
    big_diagonal_ideal,
    buchberger,
    diagonal_ideal,
    format_coefficient,
    format_polynomial,
    hilbert_function,
    ideal_equal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    nullspace,
    parse_polynomial,
    rank,
    unit_ideal,
)


def test_diagonal_ideal_generators():
    ring = PolyRing(n=2, d=2)
    ideal = diagonal_ideal(ring, (1, 2))
    assert set(ideal.generators) == {ring.var(2, 1) - ring.var(1, 1), ring.var(2, 2) - ring.var(1, 2)}
    assert len(ideal.groebner_basis()) == 2


def test_diagonal_ideal_other_pairs():
    ring = PolyRing(n=4, d=1)
    assert diagonal_ideal(ring, (4, 2)).generators == (ring.var(4, 1) - ring.var(2, 1),)
    three = PolyRing(n=3, d=2)
    assert diagonal_ideal(three, (1, 3)).generators == (three.var(3, 1) - three.var(1, 1), three.var(3, 2) - three.var(1, 2))


@pytest.mark.parametrize("pair", [(1, 1), (1, 2, 3), (0, 2), (1, 5)])
def test_diagonal_ideal_rejects_bad_pairs(pair):
    with pytest.raises(UnsupportedSizeException):
        diagonal_ideal(PolyRing(n=4, d=2), pair)


def test_buchberger_linear_reduction():
    ring = PolyRing(n=1, d=2)
    x, y = ring.var(1, 1), ring.var(1, 2)
    assert set(buchberger([x, x + y])) == {x, y}


def test_buchberger_principal_ideal_is_monic():
    ring = PolyRing(n=1, d=2)
    x, y = ring.var(1, 1), ring.var(1, 2)
    (g,) = buchberger([3 * x**2 + 6 * y**2])
    assert g == x**2 + 2 * y**2


def test_big_diagonal_contains_triple_quadric(ring3, triple_quadric):
    big = big_diagonal_ideal(ring3)
    assert big.contains(triple_quadric)
    assert triple_quadric.monic() in big.groebner_basis()


def test_big_diagonal_is_product_plus_quadric(ring3, triple_quadric):
    diagonals = [diagonal_ideal(ring3, pair) for pair in ((1, 2), (1, 3), (2, 3))]
    product = reduce(ideal_product, diagonals)
    expected = Ideal(ring3, product.generators + (triple_quadric,))
    assert ideal_equal(big_diagonal_ideal(ring3), expected)


def test_intersection_is_idempotent(ring3):
    a = diagonal_ideal(ring3, (1, 2))
    assert ideal_equal(ideal_intersection(a, a), a)


def test_intersection_rejects_foreign_ring(ring3, ring2):
    with pytest.raises(RingMismatchException):
        ideal_intersection(diagonal_ideal(ring3, (1, 2)), diagonal_ideal(ring2, (1, 2)))


def test_square_of_diagonal_has_three_generators(ring2):
    a = diagonal_ideal(ring2, (1, 2))
    square = ideal_product(a, a)
    assert ideal_equal(square, ideal_power(a, 2))
    assert len(square.groebner_basis()) == 3


def test_zeroth_power_is_unit(ring2):
    a = diagonal_ideal(ring2, (1, 2))
    assert ideal_equal(ideal_power(a, 0), unit_ideal(ring2))


def test_triple_product_degree_three_by_direct_span(ring3):
    diagonals = [diagonal_ideal(ring3, pair) for pair in ((1, 2), (1, 3), (2, 3))]
    product = reduce(ideal_product, diagonals)
    cubics = [f * g * h for f in diagonals[0].generators for g in diagonals[1].generators for h in diagonals[2].generators]
    assert len(cubics) == 8
    assert IdealSpace(product).dimension(3) == rank([dict(c.items()) for c in cubics])


def test_hilbert_function_quotient(ring2):
    assert hilbert_function(QuotientSpace(diagonal_ideal(ring2, (1, 2))), 1) == 2
    assert hilbert_function(QuotientSpace(unit_ideal(ring2)), 3) == 0


def test_hilbert_function_big_diagonal_has_no_linear_forms(ring3):
    diagonals = [diagonal_ideal(ring3, pair) for pair in ((1, 2), (1, 3), (2, 3))]
    assert hilbert_function(IntersectionSpace(diagonals), 1) == 0
    assert hilbert_function(IdealSpace(big_diagonal_ideal(ring3)), 1) == 0


def test_hilbert_function_negative_degree(ring3):
    assert hilbert_function(PolynomialSpace(ring3), -1) == 0


@pytest.mark.parametrize("degree", [2, 3, 4])
def test_intersection_space_matches_groebner(ring3, degree):
    diagonals = [diagonal_ideal(ring3, pair) for pair in ((1, 2), (1, 3), (2, 3))]
    assert IntersectionSpace(diagonals).dimension(degree) == IdealSpace(big_diagonal_ideal(ring3)).dimension(degree)


def test_truncated_groebner_agrees_below_bound(ring3):
    full = big_diagonal_ideal(ring3)
    truncated = big_diagonal_ideal(ring3, degree_bound=4)
    assert truncated.valid_to == 4
    for degree in range(5):
        assert IdealSpace(truncated).dimension(degree) == IdealSpace(full).dimension(degree)


def test_truncated_ideal_refuses_higher_degrees(ring3):
    truncated = big_diagonal_ideal(ring3, degree_bound=3)
    with pytest.raises(UnsupportedSizeException):
        QuotientSpace(truncated).basis(5)


def test_memory_guard(ring3, monkeypatch):
    monkeypatch.setenv("DIAG_MAX_MONOMIALS", "10")
    get_settings.cache_clear()
    with pytest.raises(ComputationTooLargeException):
        PolynomialSpace(ring3).dimension(3)


def test_polynomial_text_round_trip(ring3, triple_quadric):
    text = format_polynomial(triple_quadric, ring3)
    assert "x[2,1]" in text and "x[3,2]" in text
    assert parse_polynomial(ring3, text) == triple_quadric


def test_parse_rational_coefficients():
    ring = PolyRing(n=2, d=1, differentials=True)
    p = parse_polynomial(ring, "1/2 * x[1,1]^2 - 3 * x[2,1] * dx[1]")
    assert p == QQ(1, 2) * ring.var(1, 1) ** 2 - 3 * ring.var(2, 1) * ring.dx(1)
    assert format_coefficient(QQ(-3, 4)) == "-3/4"


@pytest.mark.parametrize(("value", "expected"), [(QQ(5), "5"), (QQ(-7), "-7"), (QQ(6, 4), "3/2"), (QQ(0), "0")])
def test_format_coefficient(value, expected):
    assert format_coefficient(value) == expected


def test_parse_rejects_unknown_factor(ring3):
    with pytest.raises(ValueError):
        parse_polynomial(ring3, "2 * z[1,1]")


def test_lex_normal_form_agrees_on_membership(ring3, triple_quadric):
    big = big_diagonal_ideal(ring3)
    assert not big.normal_form(triple_quadric, LEX)


def test_nullspace_of_dependent_vectors():
    vectors = [{0: QQ(1)}, {0: QQ(2)}, {1: QQ(1)}]
    (relation,) = nullspace(vectors)
    assert relation[2] == 0
    assert relation[0] == -2 * relation[1]
