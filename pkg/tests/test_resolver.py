import pytest

from diagonal_invariants import UnsupportedSizeException
from diagonal_invariants.charlab import Partition
from diagonal_invariants.resolver import (
    ShiftedComplex,
    atilde_kills_restrictions,
    atilde_matches_D,
    compare_degree,
    comparison_dataframe,
    degree_rows,
    exact_l211_sequence,
    exactness_check,
    ideal_check,
    map_A,
    map_d1,
    map_D,
    prop211_complex,
    resolution_complex,
    substitute_points,
    symmetric_quotient,
    taylor_part,
    twisted_kernel_dimension,
    twisted_reference_dimension,
)


def test_resolution_dimensions_in_low_degree():
    complex_ = resolution_complex(3)
    assert complex_.dimensions(0) == [1, 1, 0]
    assert complex_.dimensions(1) == [2, 4, 2]
    assert complex_.reference(1) == 0


def test_resolution_degree_one_is_exact():
    rows, summary = degree_rows(resolution_complex(3), 1)
    assert [row.dim for row in rows] == [2, 4, 2]
    assert summary.exact
    assert summary.euler == 0


def test_resolution_size_guard():
    with pytest.raises(UnsupportedSizeException):
        resolution_complex(5)


def test_resolution_three_points_low_degrees():
    report = exactness_check(resolution_complex(3), 4)
    assert report.verdict
    assert report.defects() == []
    assert [s.degree for s in report.summaries] == [0, 1, 2, 3, 4]


@pytest.mark.slow
def test_resolution_three_points_to_degree_ten():
    assert exactness_check(resolution_complex(3), 10).verdict


@pytest.mark.slow
def test_resolution_four_points_to_degree_six():
    report = exactness_check(resolution_complex(4), 6)
    assert report.verdict, report.defects()


def test_report_serializes_schema_and_verdict():
    payload = exactness_check(resolution_complex(3), 1).to_dict()
    assert payload["schema"] == 1
    assert payload["verdict"] is True
    assert payload["name"] == "resolution-3"


def test_shifted_complex_moves_every_degree():
    base = resolution_complex(3)
    shifted = resolution_complex(3, shift=2)
    assert isinstance(shifted, ShiftedComplex)
    assert shifted.shift == 2
    assert shifted.dimensions(3) == base.dimensions(1)
    assert shifted.dimensions(1) == [0, 0, 0]
    assert shifted.reference(3) == base.reference(1)


def test_prop211_dimensions_and_exactness():
    complex_ = prop211_complex()
    assert complex_.dimensions(1) == [4, 6, 2]
    assert exactness_check(complex_, 3).verdict


def test_exact_l211_low_degrees():
    assert exactness_check(exact_l211_sequence(), 4).verdict


def test_D_on_a_pure_tensor():
    model = symmetric_quotient(3)
    ring = model.ring
    a, b = ring.var(2, 1), ring.var(3, 2)
    expected = 2 * ring.var(3, 1) * ring.dx(2) - ring.var(3, 2) * ring.dx(1)
    assert map_D(3).apply(a * b) == expected
    assert not map_D(3).apply(ring.base.one)


def test_four_point_example_through_d1_D_and_A():
    model = symmetric_quotient(4)
    ring = model.ring
    f = ring.var(2, 1) * (ring.var(3, 1) + ring.var(4, 1))
    assert not map_d1(4).apply(f)
    form = map_D(4).apply(f)
    assert form == (ring.var(3, 1) - ring.var(4, 1)) * ring.dx(1)
    assert not map_A(4).apply(form)


def test_four_point_maps_reject_three_points():
    with pytest.raises(UnsupportedSizeException):
        map_A(3)


def test_atilde_vanishes_on_restrictions():
    assert atilde_kills_restrictions(3, 2, seed=7)
    assert atilde_kills_restrictions(4, 2, seed=7)


def test_atilde_agrees_with_D_on_three_points():
    assert atilde_matches_D(2, seed=1)
    assert atilde_matches_D(3, seed=2)


def test_substitute_points_moves_coordinates():
    ring = symmetric_quotient(3).ring
    assert substitute_points(ring.var(2, 1) * ring.var(3, 2), ring, {2: 3}) == ring.var(3, 1) * ring.var(3, 2)


def test_taylor_part_of_a_difference():
    ring = symmetric_quotient(3).ring
    difference = ring.var(2, 1) - ring.var(1, 1)
    assert taylor_part(difference, ring, 2, 1, 1) == ring.dx(1)
    assert not taylor_part(difference, ring, 2, 1, 0)
    assert taylor_part(difference**2, ring, 2, 1, 2) == ring.dx(1) ** 2


@pytest.mark.parametrize(("mu", "l", "degree"), [("(1,1,1)", 1, 3), ("(2,1)", 1, 3), ("(2,1)", 2, 4)])
def test_twisted_kernel_is_higher_vanishing(mu, l, degree):  # noqa: E741
    partition = Partition.parse(mu)
    assert twisted_kernel_dimension(partition, l, degree) == twisted_reference_dimension(partition, l, degree)


@pytest.mark.parametrize(("kind", "n", "parameter", "cap"), [("invprod", 3, 1, 4), ("inv2k", 2, 1, 4), ("inv2k", 2, 2, 5), ("haiman", 3, 2, 4)])
def test_ideal_identities_in_low_degree(kind, n, parameter, cap):
    rows = ideal_check(kind, n, parameter, cap)
    assert all(row.agree for row in rows)
    assert not any(row.experiment for row in rows)


@pytest.mark.slow
def test_invariant_product_on_four_points():
    assert all(row.agree for row in ideal_check("invprod", 4, 1, 6))


def test_ideal_check_guards():
    with pytest.raises(UnsupportedSizeException):
        compare_degree("invprod", 6, 1, 0, 2)
    with pytest.raises(UnsupportedSizeException):
        compare_degree("haiman", 3, 4, 0, 2)


def test_comparison_dataframe_has_agree_column():
    frame = comparison_dataframe(ideal_check("inv2k", 2, 1, 2))
    assert list(frame["agree"]) == [True, True, True]
    assert set(frame["check"]) == {"inv2k"}
