from pathlib import Path

import pytest
from pydantic import ValidationError
from sympy import Rational

from diagonal_invariants import GuardViolationException, NonIntegralResultException, UnsupportedSizeException
from diagonal_invariants.charlab import Partition
from diagonal_invariants.surfcalc import (
    LineBundle,
    SurfaceNumerics,
    binomial,
    bott_chi_p2,
    chi_line,
    chi_line_p2,
    chi_schur_cotangent,
    euler_det2,
    euler_report,
    euler_sequence_chi_p2,
    regularity_bounds,
    schur_cotangent_class,
)

SURFACES: Path = Path(__file__).parent.parent / "surfaces"

H = LineBundle.of(H=1)
TRIVIAL = LineBundle()


def test_noether_and_loading(p2, synthetic):
    assert p2.c2 == 3
    assert synthetic.c2 == 12
    assert p2.bundle("L") == H
    assert p2.bundle("K") == p2.canonical


def test_json_and_yaml_descriptions_agree(p2):
    from_json = SurfaceNumerics.load(SURFACES / "p2.json")
    assert (from_json.chi_O, from_json.K2, from_json.pairing) == (p2.chi_O, p2.K2, p2.pairing)


def test_unknown_bundle(p2):
    with pytest.raises(KeyError):
        p2.bundle("M")


@pytest.mark.parametrize(
    "changes",
    [
        {"pairing": [[1, -3], [-2, 9]]},
        {"classes": ["H", "D"]},
        {"K2": 8},
        {"bundles": {"L": {"E": 1}}},
        {"pairing": [[1]]},
    ],
)
def test_rejects_inconsistent_lattices(changes):
    data = {"name": "P2", "chi_O": 1, "K2": 9, "classes": ["H", "K"], "pairing": [[1, -3], [-3, 9]]} | changes
    with pytest.raises(ValidationError):
        SurfaceNumerics.model_validate(data)


def test_line_bundle_arithmetic():
    assert 2 * H + LineBundle.of(K=1) == LineBundle.of(H=2, K=1)
    assert H + -H == TRIVIAL
    assert str(TRIVIAL) == "O"
    assert str(3 * H) == "3H"


@pytest.mark.parametrize(("t", "expected"), [(2, 6), (4, 15), (0, 1), (-1, 0), (-3, 1)])
def test_line_bundles_on_the_plane(p2, t, expected):
    assert chi_line(p2, t * H) == expected
    assert chi_line_p2(t) == expected


@pytest.mark.parametrize(("parts", "t", "expected"), [((1,), 6, 35), ((1,), 8, 63), ((1, 1), 8, 21), ((3,), 8, 42), ((1,), 0, -1)])
def test_cotangent_schur_functors_on_the_plane(p2, parts, t, expected):
    assert chi_schur_cotangent(p2, Partition.of(*parts), t * H) == expected


@pytest.mark.parametrize(("parts", "t"), [((1,), 6), ((2,), 5), ((3,), 8), ((2, 1), 7), ((1, 1), 2)])
def test_localization_matches_hirzebruch_riemann_roch(p2, parts, t):
    partition = Partition.of(*parts)
    assert bott_chi_p2(partition, t) == chi_schur_cotangent(p2, partition, t * H)


@pytest.mark.parametrize(("k", "t"), [(1, 6), (2, 4), (3, 8)])
def test_euler_sequence_matches_hirzebruch_riemann_roch(p2, k, t):
    assert euler_sequence_chi_p2(k, t) == chi_schur_cotangent(p2, Partition.of(k), t * H)


def test_cotangent_classes():
    cubic = schur_cotangent_class(Partition.of(3))
    assert (cubic.rank, cubic.k_multiple, cubic.k2_coefficient, cubic.c2_coefficient) == (4, 6, 7, -10)
    canonical = schur_cotangent_class(Partition.of(1, 1))
    assert (canonical.rank, canonical.k_multiple, canonical.k2_coefficient, canonical.c2_coefficient) == (1, 1, Rational(1, 2), 0)


def test_cotangent_schur_functor_needs_two_rows_at_most(p2):
    with pytest.raises(UnsupportedSizeException):
        chi_schur_cotangent(p2, Partition.of(1, 1, 1), H)


def test_non_integral_result_is_reported():
    odd = SurfaceNumerics(name="odd", chi_O=1, K2=0, classes=["K", "L"], pairing=[[0, 0], [0, 1]])
    with pytest.raises(NonIntegralResultException):
        chi_line(odd, LineBundle.of(L=1))


def test_binomial_with_negative_top():
    assert binomial(-1, 2) == 1
    assert binomial(5, 0) == 1
    assert binomial(8, 3) == 56


def test_euler_characteristics_on_the_plane(p2):
    assert euler_det2(p2, H, TRIVIAL, 3) == 1
    assert euler_det2(p2, H, TRIVIAL, 4) == 0


def test_euler_characteristics_on_a_degenerate_lattice(synthetic):
    M = synthetic.bundle("L")
    assert chi_schur_cotangent(synthetic, Partition.of(1), M) == -10
    assert chi_schur_cotangent(synthetic, Partition.of(3), M) == -116
    assert euler_det2(synthetic, M, TRIVIAL, 3) == -10
    assert euler_det2(synthetic, M, TRIVIAL, 4) == 115


def test_euler_report(p2):
    report = euler_report(p2, H, TRIVIAL, 4)
    assert report.value == 0
    assert report.terms["χ(S³Ω¹⊗L⁸⊗A⁴)"] == 42
    assert report.terms["χ(K⊗L⁸⊗A⁴)"] == 21
    assert len(euler_report(p2, H, TRIVIAL, 3).terms) == 3


def test_euler_size_guard(p2):
    with pytest.raises(UnsupportedSizeException):
        euler_det2(p2, H, TRIVIAL, 5)


def test_invariant_regularity_on_the_plane():
    report = regularity_bounds(3, 2, "invariant", w=-3, r=1)
    assert report.threshold == 2
    assert report.bound == 8
    assert report.plane_bound == 8


def test_product_regularity_on_the_plane():
    report = regularity_bounds(3, 2, "product", w=-3, r=1)
    assert report.bound == 10
    assert report.plane_bound == 10


def test_generic_product_regularity():
    report = regularity_bounds(2, 1, "product", m0=5)
    assert report.bound == 7
    assert report.plane_bound is None
    assert report.m0_bound == 9


@pytest.mark.parametrize("n", [8, 9])
def test_product_mode_guard(n):
    with pytest.raises(GuardViolationException):
        regularity_bounds(n, 1, "product")


def test_regularity_argument_guards():
    with pytest.raises(UnsupportedSizeException):
        regularity_bounds(1, 1)
    with pytest.raises(UnsupportedSizeException):
        regularity_bounds(3, 0)
