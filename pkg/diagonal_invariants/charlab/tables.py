"""Irreducible character tables of the small groups met as graph stabilizers: S_2, S_3, S_4, D_4, C_2 and direct products."""

import logging
from collections.abc import Callable, Sequence
from itertools import product
from math import prod

import pandas as pd
from sympy.polys.domains import QQ

from diagonal_invariants.base import NotACharacterException, UnsupportedSizeException
from diagonal_invariants.polycore import format_coefficient
from diagonal_invariants.symgroup import ClassFunction, PermGroup, Permutation, symmetric_group

logger: logging.Logger = logging.getLogger(__name__)

# Values indexed by the cycle type of the restriction to the permuted points.
_SYMMETRIC_TABLES: dict[int, dict[str, dict[tuple[int, ...], int]]] = {
    2: {
        "1": {(1, 1): 1, (2,): 1},
        "ε": {(1, 1): 1, (2,): -1},
    },
    3: {
        "1": {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
        "ε": {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
        "ρ3": {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    },
    4: {
        "1": {(1, 1, 1, 1): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1, (4,): 1},
        "ε": {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): 1, (3, 1): 1, (4,): -1},
        "ρ4": {(1, 1, 1, 1): 3, (2, 1, 1): 1, (2, 2): -1, (3, 1): 0, (4,): -1},
        "Λ²ρ4": {(1, 1, 1, 1): 3, (2, 1, 1): -1, (2, 2): -1, (3, 1): 0, (4,): 1},
        "V22": {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0},
    },
}

DIHEDRAL_CLASSES: tuple[str, ...] = ("1", "σ", "σρ", "ρ", "ρ²")

# D_4 = <rho, sigma>, values on the classes 1, sigma, sigma*rho, rho, rho^2.
_DIHEDRAL_TABLE: dict[str, tuple[int, ...]] = {
    "1": (1, 1, 1, 1, 1),
    "det": (1, -1, -1, 1, 1),
    "ℓ(-1_ρ,1_σ)": (1, 1, -1, -1, 1),
    "ℓ(-1_ρ,-1_σ)": (1, -1, 1, -1, 1),
    "θ": (2, 0, 0, 0, -2),
}


def restricted_cycle_type(g: Permutation, points: Sequence[int]) -> tuple[int, ...]:
    chosen = set(points)
    return tuple(sorted((len(c) for c in g.cycles(include_fixed=True) if c[0] in chosen), reverse=True))


def dihedral_class(g: Permutation, rho: Permutation, sigma: Permutation) -> str:
    """Class of g = sigma^a rho^b in D_4."""
    for a in (0, 1):
        for b in range(4):
            if (sigma**a) * (rho**b) == g:
                if a == 0:
                    return "1" if b == 0 else ("ρ²" if b == 2 else "ρ")
                return "σρ" if b % 2 else "σ"
    raise ValueError(f"{g} is not in <{rho}, {sigma}>")


class CharacterTable:
    """The complete set of irreducible characters of `group`, by name, with a name per conjugacy class."""

    def __init__(self, group: PermGroup, characters: dict[str, ClassFunction], class_names: Sequence[str]):
        self.group = group
        self.characters = characters
        self.class_names = tuple(class_names)

    @property
    def names(self) -> list[str]:
        return list(self.characters)

    def __getitem__(self, name: str) -> ClassFunction:
        return self.characters[name]

    def __repr__(self) -> str:
        return f"CharacterTable({self.group.label}: {', '.join(self.names)})"

    def is_complete(self) -> bool:
        """Orthonormal and sum of squared degrees equal to |G|."""
        irreducibles = list(self.characters.values())
        for i, a in enumerate(irreducibles):
            for j, b in enumerate(irreducibles):
                if a.inner(b) != (QQ.one if i == j else QQ.zero):
                    return False
        return sum(chi.degree**2 for chi in irreducibles) == self.group.order

    def decompose(self, chi: ClassFunction) -> dict[str, int]:
        """Multiplicities <chi, chi_i>; all must be nonnegative integers."""
        multiplicities: dict[str, int] = {}
        for name, irreducible in self.characters.items():
            m = chi.inner(irreducible)
            if QQ.denom(m) != 1 or m < 0:
                raise NotACharacterException(name, format_coefficient(m))
            multiplicities[name] = int(m)
        rebuilt = sum((m * self.characters[name] for name, m in multiplicities.items()), ClassFunction(chi.group, [0] * len(self.class_names)))
        if rebuilt.values != chi.values:
            raise NotACharacterException(chi.label or "class function", "outside the span of the irreducibles")
        return multiplicities

    def describe(self, chi: ClassFunction) -> str:
        """E.g. "det ⊕ ℓ(-1_ρ,1_σ) ⊕ θ"; "0" for the zero character."""
        terms = [name if m == 1 else f"{m}{name}" for name, m in self.decompose(chi).items() if m]
        return " ⊕ ".join(terms) or "0"

    def values_by_class(self, chi: ClassFunction) -> dict[str, object]:
        return dict(zip(self.class_names, chi.values))

    def transfer(self, group: PermGroup) -> "CharacterTable":
        """The same table on another group object with the same elements."""
        if group is self.group:
            return self
        if group.element_set != self.group.element_set:
            raise ValueError(f"{group.label} and {self.group.label} have different elements")
        characters = {name: ClassFunction.from_function(group, chi, label=name) for name, chi in self.characters.items()}
        class_names = [self.class_names[self.group.class_index(c.representative)] for c in group.conjugacy_classes()]
        return CharacterTable(group, characters, class_names)

    def to_dataframe(self) -> pd.DataFrame:
        """Rows are the conjugacy classes, columns the irreducibles."""
        classes = self.group.conjugacy_classes()
        rows = [
            {"class": name, "representative": str(c.representative), "size": c.size}
            | {irr: format_coefficient(chi.values[k]) for irr, chi in self.characters.items()}
            for k, (name, c) in enumerate(zip(self.class_names, classes))
        ]
        return pd.DataFrame(rows)

    def to_dict(self) -> dict:
        return {
            "group": self.group.label,
            "order": self.group.order,
            "classes": list(self.class_names),
            "characters": {name: chi.as_strings() for name, chi in self.characters.items()},
        }


def _table(group: PermGroup, values: dict[str, Callable[[Permutation], object]], class_name: Callable[[Permutation], str]) -> CharacterTable:
    characters = {name: ClassFunction.from_function(group, f, label=name) for name, f in values.items()}
    return CharacterTable(group, characters, [class_name(c.representative) for c in group.conjugacy_classes()])


def symmetric_table(n: int, points: Sequence[int] | None = None) -> CharacterTable:
    """S(points) acting on 1..n, for 2, 3 or 4 points."""
    chosen = tuple(sorted(points)) if points is not None else tuple(range(1, n + 1))
    if len(chosen) not in _SYMMETRIC_TABLES:
        raise UnsupportedSizeException("symmetric group size", len(chosen), "2, 3 or 4 permuted points")
    group = symmetric_group(n, chosen if points is not None else None)
    values = {
        name: (lambda g, row=row: row[restricted_cycle_type(g, chosen)])
        for name, row in _SYMMETRIC_TABLES[len(chosen)].items()
    }
    return _table(group, values, lambda g: str(restricted_cycle_type(g, chosen)))


def dihedral_table(n: int, rho: Permutation, sigma: Permutation) -> CharacterTable:
    """D_4 generated by a rotation rho of order 4 and a reflection sigma."""
    group = PermGroup(n, [rho, sigma], label=f"D4<{rho},{sigma}>")
    if group.order != 8 or rho.order != 4 or sigma.order != 2:
        raise ValueError(f"<{rho}, {sigma}> is not dihedral of order 8")
    values = {
        name: (lambda g, row=row: row[DIHEDRAL_CLASSES.index(dihedral_class(g, rho, sigma))])
        for name, row in _DIHEDRAL_TABLE.items()
    }
    return _table(group, values, lambda g: dihedral_class(g, rho, sigma))


def cyclic2_table(n: int, generator: Permutation) -> CharacterTable:
    if generator.order != 2:
        raise ValueError(f"{generator} does not have order 2")
    group = PermGroup(n, [generator], label=f"<{generator}>")
    values = {"1": lambda g: 1, "ε": lambda g: 1 if g.is_identity() else -1}
    return _table(group, values, lambda g: "1" if g.is_identity() else str(generator))


def _split(g: Permutation, groups: Sequence[PermGroup]) -> tuple[Permutation, ...] | None:
    if len(groups) == 1:
        return (g,) if g in groups[0] else None
    for h in groups[0].elements:
        rest = _split(h.inverse() * g, groups[1:])
        if rest is not None:
            return (h, *rest)
    return None


def product_name(names: Sequence[str]) -> str:
    """"1" when every factor is trivial, else the factor names joined by ⊗."""
    return "1" if all(name == "1" for name in names) else "⊗".join(names)


def product_table(*tables: CharacterTable, label: str = "") -> CharacterTable:
    """Direct product of commuting factors with trivial pairwise intersections."""
    degree = tables[0].group.degree
    groups = [t.group for t in tables]
    group = PermGroup(degree, [g for t in tables for g in t.group.generators], label=label or "×".join(g.label for g in groups))
    if group.order != prod(g.order for g in groups):
        raise ValueError(f"{group.label} is not the direct product of its factors")
    splits: dict[Permutation, tuple[Permutation, ...]] = {g: _split(g, groups) for g in group.elements}  # type: ignore[misc]
    values: dict[str, Callable[[Permutation], object]] = {}
    for combination in product(*(t.names for t in tables)):
        factors = [t[name] for t, name in zip(tables, combination)]
        values[product_name(combination)] = lambda g, factors=factors: prod((chi(h) for chi, h in zip(factors, splits[g])), start=QQ.one)

    def class_name(g: Permutation) -> str:
        return "|".join(t.class_names[t.group.class_index(h)] for t, h in zip(tables, splits[g]))

    return _table(group, values, class_name)
