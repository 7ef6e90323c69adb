import pytest
from pydantic import ValidationError
from sympy.polys.domains import QQ

from diagonal_invariants import UnsupportedSizeException, get_settings
from diagonal_invariants.graphlab import SimpleGraph
from diagonal_invariants.polycore import IdealSpace, PolyRing, PolynomialSpace, big_diagonal_ideal, diagonal_ideal
from diagonal_invariants.symgroup import (
    ClassFunction,
    Permutation,
    act,
    cycle_type,
    invariant_basis,
    invariant_dimension,
    reynolds,
    stabilizer,
    symmetric_group,
)


def test_parse_and_cycles():
    sigma = Permutation.parse(4, "(1 2)(3 4)")
    assert sigma.images == (2, 1, 4, 3)
    assert sigma.cycles() == [(1, 2), (3, 4)]
    assert cycle_type(sigma) == (2, 2)
    assert sigma.sign == 1
    assert Permutation.parse(3, "()").is_identity()


def test_composition_is_right_to_left():
    s = Permutation.parse(3, "(1 2)")
    t = Permutation.parse(3, "(2 3)")
    assert (s * t)(3) == s(t(3)) == 1


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation(images=(1, 1, 2))


def test_act_moves_point_coordinates(ring3):
    sigma = Permutation.parse(3, "(1 2)")
    assert act(sigma, ring3.var(1, 1), ring3) == ring3.var(2, 1)
    identity = Permutation.identity(3)
    p = ring3.var(1, 1) * ring3.var(3, 2) + 5
    assert act(identity, p, ring3) == p


def test_triple_quadric_is_anti_invariant(ring3, triple_quadric):
    assert act(Permutation.parse(3, "(2 3)"), triple_quadric, ring3) == -triple_quadric
    assert reynolds(symmetric_group(3), triple_quadric, ring3) == 0


def test_reynolds_average_and_idempotence(ring3):
    group = symmetric_group(3)
    x = [ring3.var(j, 1) for j in (1, 2, 3)]
    assert reynolds(group, x[0], ring3) == (x[0] + x[1] + x[2]) * QQ(1, 3)
    p = x[0] ** 2 * ring3.var(2, 2) - 3 * x[2]
    once = reynolds(group, p, ring3)
    assert reynolds(group, once, ring3) == once


def test_invariant_dimension_of_ambient_ring(ring3):
    assert invariant_dimension(PolynomialSpace(ring3), symmetric_group(3), 1) == 2


def test_big_diagonal_has_no_low_degree_invariants(ring3):
    space = IdealSpace(big_diagonal_ideal(ring3))
    group = symmetric_group(3)
    assert [invariant_dimension(space, group, t) for t in (0, 1)] == [0, 0]


def test_invariants_of_diagonal_square_piece():
    ring = PolyRing(n=2, d=2)
    assert invariant_dimension(IdealSpace(diagonal_ideal(ring, (1, 2))), symmetric_group(2), 2) == 3


def test_invariant_basis_is_invariant(ring3):
    group = symmetric_group(3)
    space = IdealSpace(big_diagonal_ideal(ring3))
    for p in invariant_basis(space, group, 3):
        assert space.contains(p)
        assert all(act(g, p, ring3) == p for g in group.generators)


def test_invariant_basis_rejects_unstable_space(ring3):
    with pytest.raises(ValueError):
        invariant_basis(IdealSpace(diagonal_ideal(ring3, (1, 2))), symmetric_group(3), 2)


@pytest.mark.parametrize(
    ("edges", "order"),
    [
        (((1, 2), (1, 4), (2, 3), (3, 4)), 8),
        (((1, 2), (1, 3), (2, 3), (3, 4)), 2),
        (((1, 2),), 4),
    ],
)
def test_stabilizer_orders(edges, order):
    assert stabilizer(symmetric_group(4), SimpleGraph(n=4, edges=edges)).order == order


def test_class_functions_of_s3():
    group = symmetric_group(3)
    assert [c.size for c in group.conjugacy_classes()] == [1, 3, 2]
    assert ClassFunction.trivial(group).invariant_dim() == 1
    sign = ClassFunction.from_function(group, lambda g: g.sign)
    assert sign.invariant_dim() == 0
    assert (sign * sign).invariant_dim() == 1


def test_group_degree_guard(monkeypatch):
    monkeypatch.setenv("DIAG_MAX_GROUP_DEGREE", "4")
    get_settings.cache_clear()
    with pytest.raises(UnsupportedSizeException):
        symmetric_group(5)


def test_group_degree_cannot_be_raised_past_six(monkeypatch):
    monkeypatch.setenv("DIAG_MAX_GROUP_DEGREE", "7")
    get_settings.cache_clear()
    with pytest.raises(ValidationError):
        get_settings()
    monkeypatch.delenv("DIAG_MAX_GROUP_DEGREE")
    get_settings.cache_clear()
    with pytest.raises(UnsupportedSizeException):
        symmetric_group(7)
