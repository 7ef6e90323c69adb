"""Class functions and explicit matrix representations of permutation groups over Q."""

from collections.abc import Callable, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from diagonal_invariants.polycore import format_coefficient

from .group import PermGroup
from .permutation import Permutation


class ClassFunction:
    """One exact rational value per conjugacy class of `group`, in the group's class order."""

    def __init__(self, group: PermGroup, values: Sequence[object], label: str = ""):
        classes = group.conjugacy_classes()
        if len(values) != len(classes):
            raise ValueError(f"Expected {len(classes)} class values for {group.label}, got {len(values)}")
        self.group = group
        self.values: tuple = tuple(QQ.convert(v) for v in values)
        self.label = label

    @classmethod
    def from_function(cls, group: PermGroup, f: Callable[[Permutation], object], label: str = "") -> "ClassFunction":
        return cls(group, [f(c.representative) for c in group.conjugacy_classes()], label)

    @classmethod
    def trivial(cls, group: PermGroup) -> "ClassFunction":
        return cls(group, [1] * len(group.conjugacy_classes()), "1")

    def _check(self, other: "ClassFunction") -> None:
        if other.group is not self.group:
            raise ValueError(f"Class functions live on different groups: {self.group.label} and {other.group.label}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other: "ClassFunction | int") -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * QQ.convert(other) for a in self.values])

    __rmul__ = __mul__

    def __neg__(self) -> "ClassFunction":
        return self * -1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ClassFunction) and other.group is self.group and other.values == self.values

    def __hash__(self) -> int:
        return hash((id(self.group), self.values))

    def __getitem__(self, k: int) -> object:
        return self.values[k]

    def __call__(self, g: Permutation) -> object:
        return self.values[self.group.class_index(g)]

    def __repr__(self) -> str:
        return f"ClassFunction({self.label or '?'}: {self.as_strings()})"

    @property
    def degree(self) -> object:
        return self.values[0]

    def as_strings(self) -> list[str]:
        return [format_coefficient(v) for v in self.values]

    def inner(self, other: "ClassFunction") -> object:
        """<chi, psi> = (1/|G|) sum_classes |C| chi(C) psi(C); characters here are real."""
        self._check(other)
        total = sum((c.size * a * b for c, a, b in zip(self.group.conjugacy_classes(), self.values, other.values)), QQ.zero)
        return total / self.group.order

    def invariant_dim(self) -> object:
        return self.inner(ClassFunction.trivial(self.group))

    def power_map(self, k: int) -> "ClassFunction":
        """g -> chi(g^k)."""
        return ClassFunction.from_function(self.group, lambda g: self(g**k))

    def is_integral(self) -> bool:
        return all(QQ.denom(v) == 1 for v in self.values)


def _trace(matrix: DomainMatrix) -> object:
    rows = matrix.to_list()
    return sum((rows[i][i] for i in range(len(rows))), QQ.zero)


class MatrixRep:
    """A representation of `group` by exact matrices, one per element."""

    def __init__(self, group: PermGroup, dim: int, matrices: dict[Permutation, DomainMatrix], label: str = ""):
        self.group = group
        self.dim = dim
        self.matrices = matrices
        self.label = label

    @classmethod
    def from_function(cls, group: PermGroup, dim: int, f: Callable[[Permutation], Sequence[Sequence[object]]], label: str = "") -> "MatrixRep":
        matrices = {g: DomainMatrix([[QQ.convert(v) for v in row] for row in f(g)], (dim, dim), QQ) for g in group.elements}
        return cls(group, dim, matrices, label)

    def matrix(self, g: Permutation) -> DomainMatrix:
        return self.matrices[g]

    def is_homomorphism(self) -> bool:
        if self.dim == 0:
            return True
        elements = self.group.elements
        return all(self.matrices[s * t] == self.matrices[s] * self.matrices[t] for s in elements for t in elements)

    def character(self, label: str = "") -> ClassFunction:
        if self.dim == 0:
            return ClassFunction(self.group, [0] * len(self.group.conjugacy_classes()), label)
        return ClassFunction.from_function(self.group, lambda g: _trace(self.matrices[g]), label or self.label)

    def restrict(self, basis: Sequence[Sequence[object]], label: str = "") -> "MatrixRep":
        """The action on the stable subspace spanned by the columns `basis` (each a vector of length dim)."""
        k = len(basis)
        if k == 0:
            return MatrixRep(self.group, 0, {g: DomainMatrix([], (0, 0), QQ) for g in self.group.elements}, label)
        columns = DomainMatrix([[QQ.convert(basis[c][r]) for c in range(k)] for r in range(self.dim)], (self.dim, k), QQ)
        transpose = columns.transpose()
        projector = (transpose * columns).inv() * transpose
        return MatrixRep(self.group, k, {g: projector * m * columns for g, m in self.matrices.items()}, label)
