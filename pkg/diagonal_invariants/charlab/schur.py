"""Characters of Schur functors, computed from power traces with Newton's identities and Jacobi-Trudi."""

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from diagonal_invariants.symgroup import ClassFunction, MatrixRep, Permutation

from .partitions import Partition


def _as_character(rep: MatrixRep | ClassFunction) -> ClassFunction:
    return rep.character() if isinstance(rep, MatrixRep) else rep


def power_traces(chi: ClassFunction, g: Permutation, m: int) -> list:
    """[p_1, ..., p_m] with p_k = tr(g^k) = chi(g^k)."""
    return [chi(g**k) for k in range(1, m + 1)]


def complete_values(powers: list) -> list:
    """h_0..h_m from p_1..p_m: m h_m = sum_{i=1}^m p_i h_{m-i}."""
    h = [QQ.one]
    for m in range(1, len(powers) + 1):
        h.append(sum((powers[i - 1] * h[m - i] for i in range(1, m + 1)), QQ.zero) / m)
    return h


def elementary_values(powers: list) -> list:
    """e_0..e_m from p_1..p_m: m e_m = sum_{i=1}^m (-1)^(i-1) p_i e_{m-i}."""
    e = [QQ.one]
    for m in range(1, len(powers) + 1):
        e.append(sum(((-1) ** (i - 1) * powers[i - 1] * e[m - i] for i in range(1, m + 1)), QQ.zero) / m)
    return e


def jacobi_trudi(partition: Partition, h: list) -> object:
    """det(h_{lambda_i - i + j}) with h_k = 0 for k < 0."""
    size = partition.rows
    if size == 0:
        return QQ.one

    def entry(i: int, j: int) -> object:
        k = partition.parts[i] - i + j
        return h[k] if 0 <= k < len(h) else QQ.zero

    return DomainMatrix([[entry(i, j) for j in range(size)] for i in range(size)], (size, size), QQ).det()


def schur_character(partition: Partition, rep: MatrixRep | ClassFunction) -> ClassFunction:
    """The character of S^lambda V; S^(q) is Sym^q and S^(1^q) is Lambda^q."""
    chi = _as_character(rep)
    weight = partition.weight

    def value(g: Permutation) -> object:
        return jacobi_trudi(partition, complete_values(power_traces(chi, g, weight)))

    return ClassFunction.from_function(chi.group, value, label=f"S{partition}{chi.label}")


def exterior_character(rep: MatrixRep | ClassFunction, q: int) -> ClassFunction:
    chi = _as_character(rep)
    return ClassFunction.from_function(chi.group, lambda g: elementary_values(power_traces(chi, g, q))[q], label=f"L{q}{chi.label}")


def symmetric_character(rep: MatrixRep | ClassFunction, q: int) -> ClassFunction:
    chi = _as_character(rep)
    return ClassFunction.from_function(chi.group, lambda g: complete_values(power_traces(chi, g, q))[q], label=f"S{q}{chi.label}")
