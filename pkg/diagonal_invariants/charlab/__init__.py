from .partitions import Partition, partitions
from .presentations import PRESENTATIONS, StabilizerFactor, StabilizerPresentation, builtin_table, presentation_for
from .reproduce import (
    EXPECTED_CYCLE_CLASSES,
    EXPECTED_TABLE1,
    EXPECTED_TABLE2,
    TABLE1_COLUMNS,
    TABLE1_GRAPHS,
    CycleCharacters,
    FrobeniusRow,
    Table1,
    Table2Row,
    Table3Entry,
    classify_cycle_representation,
    cycle_characters,
    decompose,
    describe_cycle_representation,
    frobenius_identity_check,
    frobenius_identity_rows,
    invariant_dim,
    isotypic_multiplicities,
    non_acyclic_classes,
    schur_invariants,
    table1,
    table2,
    table3,
)
from .schur import complete_values, elementary_values, exterior_character, jacobi_trudi, power_traces, schur_character, symmetric_character
from .tables import (
    DIHEDRAL_CLASSES,
    CharacterTable,
    cyclic2_table,
    dihedral_class,
    dihedral_table,
    product_name,
    product_table,
    restricted_cycle_type,
    symmetric_table,
)

__all__: list[str] = [
    "DIHEDRAL_CLASSES",
    "EXPECTED_CYCLE_CLASSES",
    "EXPECTED_TABLE1",
    "EXPECTED_TABLE2",
    "PRESENTATIONS",
    "TABLE1_COLUMNS",
    "TABLE1_GRAPHS",
    "CharacterTable",
    "CycleCharacters",
    "FrobeniusRow",
    "Partition",
    "StabilizerFactor",
    "StabilizerPresentation",
    "Table1",
    "Table2Row",
    "Table3Entry",
    "builtin_table",
    "classify_cycle_representation",
    "complete_values",
    "cycle_characters",
    "cyclic2_table",
    "decompose",
    "describe_cycle_representation",
    "dihedral_class",
    "dihedral_table",
    "elementary_values",
    "exterior_character",
    "frobenius_identity_check",
    "frobenius_identity_rows",
    "invariant_dim",
    "isotypic_multiplicities",
    "jacobi_trudi",
    "non_acyclic_classes",
    "partitions",
    "power_traces",
    "presentation_for",
    "product_name",
    "product_table",
    "restricted_cycle_type",
    "schur_character",
    "schur_invariants",
    "symmetric_character",
    "symmetric_table",
    "table1",
    "table2",
    "table3",
]
