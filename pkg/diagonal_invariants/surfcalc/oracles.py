"""Independent evaluations of χ(S^λΩ¹(t)) on the projective plane: localization and the Euler sequence."""

from sympy import Symbol, cancel, together

from diagonal_invariants.charlab import Partition

from .euler import binomial

# Torus weights on the homogeneous coordinates; pairwise differences are nonzero.
P2_WEIGHTS: tuple[int, int, int] = (0, 1, 3)


def chi_line_p2(t: int) -> int:
    """χ(O(t)) = (t + 1)(t + 2)/2."""
    return binomial(t + 2, 2)


def bott_chi_p2(partition: Partition, t: int, weights: tuple[int, int, int] = P2_WEIGHTS) -> int:
    """χ(S^λΩ¹(t)) as the sum over the three fixed points of tr(E_p) / ∏(1 - q^{-a}) over the tangent weights a, at q = 1."""
    if not 1 <= len(partition.parts) <= 2:
        raise ValueError(f"Ω¹ of the plane has rank 2; {partition} has too many rows")
    first = partition.parts[0]
    second = partition.parts[1] if len(partition.parts) == 2 else 0
    q = Symbol("q")
    total = 0
    for i, a_i in enumerate(weights):
        tangent = [a_j - a_i for j, a_j in enumerate(weights) if j != i]
        b1, b2 = (-a for a in tangent)
        fiber = sum(q ** (second * (b1 + b2) + k * b1 + (first - second - k) * b2 - t * a_i) for k in range(first - second + 1))
        denominator = (1 - q ** (-tangent[0])) * (1 - q ** (-tangent[1]))
        total += fiber / denominator
    value = cancel(together(total)).subs(q, 1)
    return int(value)


def euler_sequence_chi_p2(k: int, t: int) -> int:
    """χ(S^kΩ¹(t)) = C(k+2, 2) χ(O(t-k)) - C(k+1, 2) χ(O(t-k+1)), from 0 -> S^kΩ¹ -> S^k(O(-1)³) -> S^{k-1}(O(-1)³) -> 0."""
    return binomial(k + 2, 2) * chi_line_p2(t - k) - binomial(k + 1, 2) * chi_line_p2(t - k + 1)
