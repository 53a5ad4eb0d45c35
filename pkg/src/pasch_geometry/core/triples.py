"""Storage for the ternary relation of a geometry."""
from bisect import bisect_left
from collections import defaultdict
from typing import Iterable, Iterator
import numpy as np

# Carriers up to this size keep a dense n^3 membership table.
DENSE_THRESHOLD = 64

Triple = tuple[int, int, int]


class TripleSet:
    """
    Finite set of index triples with fast membership and per-pair slicing.

    Triples are kept sorted lexicographically, which is also the canonical
    serialization order. Membership uses a dense boolean table for small
    carriers and binary search over the sorted list otherwise.
    """

    __slots__ = ('_size', '_triples', '_dense', '_slices', '_heads')

    def __init__(self, size: int, triples: Iterable[Triple]):
        if size < 1:
            raise ValueError(f"Carrier size must be at least 1, got {size}")
        unique = sorted({tuple(int(i) for i in t) for t in triples})
        for t in unique:
            if len(t) != 3 or not all(0 <= i < size for i in t):
                raise ValueError(f"Triple {t} out of range for carrier of size {size}")

        self._size = size
        self._triples: tuple[Triple, ...] = tuple(unique)

        self._dense: np.ndarray | None = None
        if size <= DENSE_THRESHOLD:
            self._dense = np.zeros((size, size, size), dtype=bool)
            if unique:
                a, b, c = np.array(unique, dtype=np.intp).T
                self._dense[a, b, c] = True

        slices: dict[tuple[int, int], list[int]] = defaultdict(list)
        heads: dict[tuple[int, int], list[int]] = defaultdict(list)
        for a, b, c in self._triples:
            slices[(a, b)].append(c)
            heads[(b, c)].append(a)
        self._slices = {k: tuple(sorted(v)) for k, v in slices.items()}
        self._heads = {k: tuple(sorted(v)) for k, v in heads.items()}

    @property
    def size(self) -> int:
        """Number of elements of the carrier the indices refer to."""
        return self._size

    @property
    def triples(self) -> tuple[Triple, ...]:
        return self._triples

    @property
    def dense(self) -> np.ndarray | None:
        """Boolean membership table indexed [a, b, c], or None for large carriers."""
        return self._dense

    def member(self, a: int, b: int, c: int) -> bool:
        if self._dense is not None:
            return bool(self._dense[a, b, c])
        t = (a, b, c)
        pos = bisect_left(self._triples, t)
        return pos < len(self._triples) and self._triples[pos] == t

    def slice(self, a: int, b: int) -> tuple[int, ...]:
        """All c with (a, b, c) in the relation, ascending."""
        return self._slices.get((a, b), ())

    def heads(self, b: int, c: int) -> tuple[int, ...]:
        """All a with (a, b, c) in the relation, ascending."""
        return self._heads.get((b, c), ())

    def restrict(self, indices: Iterable[int]) -> 'TripleSet':
        """Relation induced on a subset, re-indexed by position in the sorted subset."""
        members = sorted(set(indices))
        position = {old: new for new, old in enumerate(members)}
        induced = (
            (position[a], position[b], position[c])
            for a, b, c in self._triples
            if a in position and b in position and c in position
        )
        return TripleSet(len(members), induced)

    def __contains__(self, triple: object) -> bool:
        if not isinstance(triple, tuple) or len(triple) != 3:
            return False
        a, b, c = triple
        if not all(isinstance(i, (int, np.integer)) and 0 <= i < self._size for i in triple):
            return False
        return self.member(int(a), int(b), int(c))

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __len__(self) -> int:
        return len(self._triples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TripleSet):
            return NotImplemented
        return self._size == other._size and self._triples == other._triples

    def __hash__(self) -> int:
        return hash((self._size, self._triples))

    def __repr__(self) -> str:
        return f"TripleSet(size={self._size}, triples={len(self._triples)})"
