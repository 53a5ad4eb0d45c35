"""Finite groups as Cayley tables, and their sharp and double-coset geometries."""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product as cartesian
from typing import Iterable, Sequence
import numpy as np
from pasch_geometry.core.geometry import Geometry, hyperproduct, is_sharp
from pasch_geometry.core.triples import TripleSet
from pasch_geometry.exceptions import GroupTableError, NotSharpError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """
    A finite magma given by labels and an n x n table of product indices.

    Rows are the left factor: table[x, y] is the index of x·y.
    """
    labels: tuple[str, ...]
    table: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(self.labels))
        array = np.asarray(self.table, dtype=np.intp)
        array.setflags(write=False)
        object.__setattr__(self, 'table', array)

    @property
    def size(self) -> int:
        return len(self.labels)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @cached_property
    def identity(self) -> int:
        n = self.size
        row = np.arange(n)
        for x in range(n):
            if np.array_equal(self.table[x], row) and np.array_equal(self.table[:, x], row):
                return x
        raise GroupTableError("no identity element")

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity
        result = []
        for x in range(self.size):
            found = np.flatnonzero((self.table[x] == e) & (self.table[:, x] == e))
            if found.size == 0:
                raise GroupTableError("no inverse", (self.labels[x],))
            result.append(int(found[0]))
        return tuple(result)

    def inverse(self, x: int) -> int:
        return self.inverses[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.labels, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"CayleyTable(n={self.size}, labels={list(self.labels)})"


def validate_group_table(table: CayleyTable) -> CayleyTable:
    """
    Check closure, identity, inverses and associativity.

    Raises:
        GroupTableError: Naming the failed group axiom, with a witness
    """
    t = table.table
    n = table.size
    if n < 1 or t.shape != (n, n):
        raise GroupTableError(f"table shape {t.shape} does not match {n} labels")
    if len(set(table.labels)) != n:
        raise GroupTableError("duplicate labels")
    bad = np.argwhere((t < 0) | (t >= n))
    if bad.size:
        x, y = bad[0]
        raise GroupTableError("not closed", (table.labels[x], table.labels[y]))

    # both raise GroupTableError when missing
    table.identity
    table.inverses

    # (xy)z against x(yz), all triples at once
    left = t[t, :]
    right = t[np.arange(n)[:, None, None], t[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        x, y, z = (table.labels[i] for i in bad[0])
        raise GroupTableError("not associative", (x, y, z))
    return table


def from_group_table(table: CayleyTable, name: str | None = None) -> Geometry:
    """
    The sharp geometry of a group: (x, y, z) in Δ iff xyz = e.

    Raises:
        GroupTableError: If the table is not a group
    """
    validate_group_table(table)
    n = table.size
    triples = [
        (x, y, table.inverse(table.mul(x, y)))
        for x, y in cartesian(range(n), repeat=2)
    ]
    return Geometry(table.labels, table.identity, TripleSet(n, triples), name)


def to_group_table(geometry: Geometry) -> CayleyTable:
    """
    The group of a sharp geometry, with x·y the unique element of x * y.

    Raises:
        NotSharpError: If the geometry is not sharp
    """
    if not is_sharp(geometry):
        raise NotSharpError(f"{geometry!r} is not sharp")
    n = geometry.size
    t = np.empty((n, n), dtype=np.intp)
    for x, y in cartesian(range(n), repeat=2):
        (value,) = hyperproduct(geometry, x, y)
        t[x, y] = value
    return CayleyTable(geometry.elements, t)


def cyclic_group_table(n: int, labels: Sequence[str] | None = None) -> CayleyTable:
    """Z_n with element k at index k; labels default to "0".."n-1"."""
    if n < 1:
        raise ValueError(f"Cyclic group order must be positive, got {n}")
    labels = tuple(labels) if labels is not None else tuple(str(k) for k in range(n))
    if len(labels) != n:
        raise ValueError(f"Expected {n} labels, got {len(labels)}")
    k = np.arange(n)
    return CayleyTable(labels, (k[:, None] + k[None, :]) % n)


def cycle_notation(perm: Sequence[int]) -> str:
    """Cycle notation with 1-based points, "e" for the identity."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = []
        i = start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = perm[i]
        cycles.append('(' + ''.join(cycle) + ')')
    return ''.join(cycles) or 'e'


def symmetric_group_table(n: int) -> CayleyTable:
    """
    S_n for n <= 4 with permutations in lexicographic order (identity first).

    The product is composition, x·y = x ∘ y (y applied first).
    """
    if not 1 <= n <= 4:
        raise ValueError(f"Symmetric groups are supported for 1 <= n <= 4, got {n}")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    t = np.array([
        [index[tuple(p[q[i]] for i in range(n))] for q in perms]
        for p in perms
    ])
    return CayleyTable(tuple(cycle_notation(p) for p in perms), t)


def validate_subgroup(table: CayleyTable, subset: Iterable[int]) -> tuple[int, ...]:
    """
    Check that subset is a subgroup of a group table.

    Raises:
        GroupTableError: If the identity, a product or an inverse is missing
    """
    members = tuple(sorted(set(subset)))
    labels = table.labels
    if table.identity not in members:
        raise GroupTableError("not a subgroup: identity missing")
    member_set = set(members)
    for x, y in cartesian(members, repeat=2):
        if table.mul(x, y) not in member_set:
            raise GroupTableError(
                "not a subgroup: not closed under the product", (labels[x], labels[y])
            )
    for x in members:
        if table.inverse(x) not in member_set:
            raise GroupTableError("not a subgroup: inverse missing", (labels[x],))
    return members


def double_cosets(table: CayleyTable, subgroup: Iterable[int]) -> list[tuple[int, ...]]:
    """Double cosets HgH ordered by their smallest element index."""
    h = validate_subgroup(table, subgroup)
    covered: set[int] = set()
    cosets = []
    for g in range(table.size):
        if g in covered:
            continue
        coset = tuple(sorted({
            table.mul(table.mul(h1, g), h2) for h1 in h for h2 in h
        }))
        covered.update(coset)
        cosets.append(coset)
    return cosets


def double_coset_geometry(
    table: CayleyTable,
    subgroup: Iterable[int],
    name: str | None = None,
) -> Geometry:
    """
    Geometry of the double cosets H\\G/H.

    Elements are the double cosets labelled "[g]" by their first member,
    the identity is H, and (X, Y, Z) is in Δ iff e lies in the product set
    X·Y·Z. Since e = xyz forces z = (xy)^-1, Δ is the image of the group's
    relation under the coset projection.

    Raises:
        GroupTableError: If the table is not a group or H is not a subgroup
    """
    validate_group_table(table)
    cosets = double_cosets(table, subgroup)
    coset_of = np.empty(table.size, dtype=np.intp)
    for k, coset in enumerate(cosets):
        coset_of[list(coset)] = k

    t = table.table
    inv = np.array(table.inverses, dtype=np.intp)
    n = table.size
    xs, ys = np.divmod(np.arange(n * n), n)
    zs = inv[t[xs, ys]]
    triples = set(zip(coset_of[xs].tolist(), coset_of[ys].tolist(), coset_of[zs].tolist()))

    labels = tuple(f"[{table.labels[coset[0]]}]" for coset in cosets)
    identity = int(coset_of[table.identity])
    logger.debug(
        f"Built double coset geometry | group order: {n} | "
        f"subgroup order: {len(cosets[identity])} | cosets: {len(cosets)}"
    )
    return Geometry(labels, identity, TripleSet(len(cosets), triples), name)


def group_homomorphisms(source: CayleyTable, target: CayleyTable) -> list[tuple[int, ...]]:
    """
    All maps f with f(x·y) = f(x)·f(y), by brute force over every map.

    Independent of the geometry machinery; used as an oracle.
    """
    n, m = source.size, target.size
    maps = np.array(list(cartesian(range(m), repeat=n)), dtype=np.intp).reshape(-1, n)
    lhs = maps[:, source.table]
    rhs = target.table[maps[:, :, None], maps[:, None, :]]
    keep = (lhs == rhs).all(axis=(1, 2))
    return [tuple(int(v) for v in row) for row in maps[keep]]


def klein_group_table() -> CayleyTable:
    """Z2 x Z2 as a table on e, a, b, c with x·y given by index xor."""
    k = np.arange(4)
    return CayleyTable(('e', 'a', 'b', 'c'), k[:, None] ^ k[None, :])
