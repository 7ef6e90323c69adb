"""Exact linear algebra over Q on sparse coefficient vectors."""

from collections.abc import Hashable, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

Vector = dict[Hashable, object]


def poly_vector(p: PolyElement) -> Vector:
    return dict(p.items())


def tuple_vector(parts: Sequence[PolyElement]) -> Vector:
    """Coefficient vector of an element of a free module, keyed by (component, monomial)."""
    return {(k, monom): coeff for k, part in enumerate(parts) for monom, coeff in part.items()}


def matrix_from_vectors(vectors: Sequence[Vector], keys: Sequence[Hashable] | None = None) -> tuple[DomainMatrix, list[Hashable]]:
    """Stack `vectors` as rows of a sparse matrix; returns the matrix and its column keys."""
    if keys is None:
        keys = sorted({key for vector in vectors for key in vector}, key=repr)
    column = {key: k for k, key in enumerate(keys)}
    rows = {r: {column[key]: QQ.convert(value) for key, value in vector.items() if value} for r, vector in enumerate(vectors)}
    rows = {r: row for r, row in rows.items() if row}
    return DomainMatrix(rows, (len(vectors), len(keys)), QQ), list(keys)


def rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    matrix, keys = matrix_from_vectors(vectors)
    if not keys:
        return 0
    return matrix.rank()


def independent_subset(vectors: Sequence[Vector]) -> list[int]:
    """Indices of the first maximal linearly independent subfamily, in order."""
    if not vectors:
        return []
    matrix, keys = matrix_from_vectors(vectors)
    if not keys:
        return []
    _, pivots = matrix.transpose().rref()
    return list(pivots)


def nullspace(vectors: Sequence[Vector]) -> list[list[object]]:
    """Basis of the relations sum_k c_k vectors[k] = 0, as coefficient lists of length len(vectors)."""
    count = len(vectors)
    if count == 0:
        return []
    matrix, keys = matrix_from_vectors(vectors)
    if not keys:
        return [[QQ.one if r == k else QQ.zero for r in range(count)] for k in range(count)]
    null = matrix.transpose().nullspace()
    return [list(row) for row in null.to_list()] if null.shape[0] else []


def coordinates(vector: Vector, basis: Sequence[Vector]) -> list[object] | None:
    """Coordinates of `vector` in the independent family `basis`, or None when it is outside the span."""
    if not vector:
        return [QQ.zero] * len(basis)
    if not basis:
        return None
    relations = nullspace([*basis, vector])
    for relation in relations:
        last = relation[-1]
        if last:
            return [-c / last for c in relation[:-1]]
    return None


def determinant(rows: Sequence[Sequence[object]]) -> object:
    if not rows:
        return QQ.one
    return DomainMatrix([[QQ.convert(value) for value in row] for row in rows], (len(rows), len(rows)), QQ).det()
