from .action import act, invariant_basis, invariant_dimension, orbit, orbit_sum, orbit_sums, permute_monomial, position_map, reynolds
from .group import ConjugacyClass, HasEdges, PermGroup, stabilizer, symmetric_group
from .permutation import Permutation, cycle_type
from .representation import ClassFunction, MatrixRep

__all__: list[str] = [
    "ClassFunction",
    "ConjugacyClass",
    "HasEdges",
    "MatrixRep",
    "PermGroup",
    "Permutation",
    "act",
    "cycle_type",
    "invariant_basis",
    "invariant_dimension",
    "orbit",
    "orbit_sum",
    "orbit_sums",
    "permute_monomial",
    "position_map",
    "reynolds",
    "stabilizer",
    "symmetric_group",
]
