"""Pasch geometry value types and elementwise operations."""
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian
from typing import Iterable, Iterator, Sequence
import numpy as np
from pasch_geometry.core.triples import Triple, TripleSet
from pasch_geometry.exceptions import AxiomViolationError


@dataclass(frozen=True, eq=False)
class Geometry:
    """
    A finite Pasch geometry (A, e, Δ).

    Elements are identified by position; labels exist for input and output
    only. Equality is structural: same labels in the same order, same
    identity, same relation. The name takes no part in equality.
    """
    elements: tuple[str, ...]
    identity: int
    delta: TripleSet
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, 'elements', tuple(self.elements))
        n = len(self.elements)
        if n < 1:
            raise ValueError("A geometry needs at least one element")
        if len(set(self.elements)) != n:
            dup = next(x for x, count in Counter(self.elements).items() if count > 1)
            raise ValueError(f"Duplicate element label: {dup}")
        for label in self.elements:
            # '#' starts a comment in the text format
            if not label or '#' in label or any(ch.isspace() for ch in label):
                raise ValueError(f"Element label must be a non-empty token: {label!r}")
        if not 0 <= self.identity < n:
            raise ValueError(f"Identity index {self.identity} out of range")
        if self.delta.size != n:
            raise ValueError(
                f"Relation is over {self.delta.size} elements, carrier has {n}"
            )

    @classmethod
    def from_labels(
        cls,
        elements: Sequence[str],
        identity: str,
        triples: Iterable[tuple[str, str, str]],
        name: str | None = None,
    ) -> 'Geometry':
        """Build a geometry from label triples."""
        position = {label: i for i, label in enumerate(elements)}
        try:
            indexed = [tuple(position[x] for x in t) for t in triples]
            e = position[identity]
        except KeyError as exc:
            raise ValueError(f"Unknown element label: {exc.args[0]}") from None
        return cls(tuple(elements), e, TripleSet(len(elements), indexed), name)

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.elements)}

    def index(self, label: str) -> int:
        """Index of a label; KeyError for unknown labels."""
        return self._positions[label]

    def label(self, index: int) -> str:
        return self.elements[index]

    def labelled(self, triple: Triple) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in triple)

    def renamed(self, name: str | None) -> 'Geometry':
        return Geometry(self.elements, self.identity, self.delta, name)

    def slice(self, a: int, b: int) -> tuple[int, ...]:
        return self.delta.slice(a, b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Geometry):
            return NotImplemented
        return (
            self.elements == other.elements
            and self.identity == other.identity
            and self.delta == other.delta
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.identity, self.delta))

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        name = self.name or 'geometry'
        return f"Geometry({name}, n={self.size}, |Δ|={len(self.delta)})"


@dataclass(frozen=True)
class SubsetHandle:
    """A set of element indices of a parent geometry, kept sorted."""
    parent: Geometry
    members: tuple[int, ...] = field(default=())

    def __post_init__(self):
        members = tuple(sorted(set(int(i) for i in self.members)))
        for i in members:
            if not 0 <= i < self.parent.size:
                raise ValueError(f"Index {i} out of range for {self.parent!r}")
        object.__setattr__(self, 'members', members)

    @classmethod
    def of_labels(cls, parent: Geometry, labels: Iterable[str]) -> 'SubsetHandle':
        return cls(parent, tuple(parent.index(x) for x in labels))

    @property
    def contains_identity(self) -> bool:
        return self.parent.identity in self.members

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.parent.label(i) for i in self.members)

    def __contains__(self, index: object) -> bool:
        return index in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def cyclic_closure(triples: Iterable[Triple]) -> set[Triple]:
    """Close a set of triples under (a, b, c) -> (b, c, a)."""
    closed: set[Triple] = set()
    for a, b, c in triples:
        closed.update({(a, b, c), (b, c, a), (c, a, b)})
    return closed


def involution_candidates(geometry: Geometry, a: int) -> tuple[int, ...]:
    """All b with (a, b, e) in Δ."""
    e = geometry.identity
    return tuple(b for b in range(geometry.size) if geometry.delta.member(a, b, e))


def involution(geometry: Geometry, a: int) -> int:
    """
    The unique b with (a, b, e) in Δ, written a#.

    Raises:
        AxiomViolationError: If there is no candidate or more than one
    """
    candidates = involution_candidates(geometry, a)
    if len(candidates) != 1:
        raise AxiomViolationError(
            f"Element {geometry.label(a)} has {len(candidates)} involution "
            f"candidates, axiom 1 requires exactly one"
        )
    return candidates[0]


def involution_table(geometry: Geometry) -> tuple[int, ...]:
    """a# for every a, in index order."""
    return tuple(involution(geometry, a) for a in range(geometry.size))


def is_abelian(geometry: Geometry) -> bool:
    """True iff (a, b, c) in Δ implies (b, a, c) in Δ."""
    dense = geometry.delta.dense
    if dense is not None:
        return bool(np.array_equal(dense, dense.transpose(1, 0, 2)))
    return all(geometry.delta.member(b, a, c) for a, b, c in geometry.delta)


def is_sharp(geometry: Geometry) -> bool:
    """True iff every pair (a, b) has at most one completing c."""
    dense = geometry.delta.dense
    if dense is not None:
        return bool((dense.sum(axis=2) <= 1).all())
    n = geometry.size
    return all(len(geometry.slice(a, b)) <= 1 for a, b in cartesian(range(n), repeat=2))


def hyperproduct(geometry: Geometry, a: int, b: int) -> frozenset[int]:
    """The set a * b = { c# : (a, b, c) in Δ }."""
    return frozenset(involution(geometry, c) for c in geometry.slice(a, b))


def set_hyperproduct(
    geometry: Geometry, left: Iterable[int], right: Iterable[int]
) -> frozenset[int]:
    """Union of a * b over a in left, b in right."""
    right = tuple(right)
    result: set[int] = set()
    for a in left:
        for b in right:
            result |= hyperproduct(geometry, a, b)
    return frozenset(result)


def subcategory_membership(geometry: Geometry) -> dict[str, bool]:
    """Whether the geometry is an object of P1 (abelian) and P2 (sharp)."""
    return {'P1': is_abelian(geometry), 'P2': is_sharp(geometry)}
