"""Maps between geometries: verification, composition, kernels, enumeration."""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterator, Mapping
from pasch_geometry.category.config import MapKind
from pasch_geometry.core.config import DEFAULT_LIMITS, SearchLimits
from pasch_geometry.core.geometry import Geometry, SubsetHandle, involution_table
from pasch_geometry.core.subgeometry import is_subgeometry
from pasch_geometry.exceptions import (
    ConstructionError,
    NotAMorphismError,
    ShapeError,
    SizeLimitError,
)

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class GeometryMap:
    """
    A total map source -> target given by an index table.

    The morphism and homomorphism flags cache verification results:
    None means unchecked. Maps compare by (source, target, table).
    """
    source: Geometry
    target: Geometry
    table: tuple[int, ...]
    morphism: bool | None = None
    homomorphism: bool | None = None

    def __post_init__(self):
        self.table = tuple(int(v) for v in self.table)
        if len(self.table) != self.source.size:
            raise ShapeError(
                f"Map table has {len(self.table)} entries, source has {self.source.size}"
            )
        for v in self.table:
            if not 0 <= v < self.target.size:
                raise ShapeError(f"Map value {v} out of range for {self.target!r}")

    @classmethod
    def identity(cls, geometry: Geometry) -> 'GeometryMap':
        return cls(geometry, geometry, tuple(range(geometry.size)), True, True)

    @classmethod
    def constant(cls, source: Geometry, target: Geometry) -> 'GeometryMap':
        """Everything to the target identity."""
        return cls(source, target, (target.identity,) * source.size)

    @classmethod
    def from_labels(
        cls, source: Geometry, target: Geometry, pairs: Mapping[str, str]
    ) -> 'GeometryMap':
        try:
            table = tuple(target.index(pairs[x]) for x in source.elements)
        except KeyError as exc:
            raise ShapeError(f"Unmapped or unknown element: {exc.args[0]}") from None
        return cls(source, target, table)

    @property
    def key(self) -> tuple[Geometry, Geometry, tuple[int, ...]]:
        return (self.source, self.target, self.table)

    def pairs(self) -> list[tuple[str, str]]:
        """(source label, target label) in source index order."""
        return [
            (self.source.label(i), self.target.label(v)) for i, v in enumerate(self.table)
        ]

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(set(self.table)) == self.source.size

    def __call__(self, index: int) -> int:
        return self.table[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeometryMap):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        shown = ' '.join(f"{x}->{y}" for x, y in self.pairs())
        return f"GeometryMap({self.source.name or 'A'} -> {self.target.name or 'B'}: {shown})"


def morphism_violation(f: GeometryMap) -> tuple[int, ...] | None:
    """
    A witness that f is not a morphism, or None.

    The witness is (e_A,) when the identity is not preserved, otherwise a
    source triple whose image leaves Δ_B.
    """
    if f.table[f.source.identity] != f.target.identity:
        return (f.source.identity,)
    member = f.target.delta.member
    t = f.table
    for x, y, z in f.source.delta:
        if not member(t[x], t[y], t[z]):
            return (x, y, z)
    return None


def is_morphism(f: GeometryMap) -> bool:
    """True iff f(e_A) = e_B and f carries Δ_A into Δ_B; sets the flag."""
    f.morphism = morphism_violation(f) is None
    return f.morphism


def homomorphism_violation(f: GeometryMap) -> tuple[int, ...] | None:
    """
    A witness (x, y, b) against the lifting condition, or None.

    (f x, f y, b) is in Δ_B but no z with f z = b has (x, y, z) in Δ_A.
    """
    source, target, t = f.source, f.target, f.table
    for x, y in cartesian(range(source.size), repeat=2):
        lifted = {t[z] for z in source.slice(x, y)}
        for b in target.slice(t[x], t[y]):
            if b not in lifted:
                return (x, y, b)
    return None


def is_homomorphism(f: GeometryMap) -> bool:
    """True iff f is a morphism with the lifting property; sets both flags."""
    if not is_morphism(f):
        f.homomorphism = False
        return False
    f.homomorphism = homomorphism_violation(f) is None
    return f.homomorphism


def is_kind(f: GeometryMap, kind: MapKind) -> bool:
    if kind is MapKind.HOMOMORPHISM:
        return is_homomorphism(f)
    return is_morphism(f)


def _require_morphism(f: GeometryMap) -> None:
    if f.morphism is None:
        is_morphism(f)
    if not f.morphism:
        raise NotAMorphismError(f"{f!r} is not a morphism")


def compose(g: GeometryMap, f: GeometryMap) -> GeometryMap:
    """
    g ∘ f.

    A composite of verified morphisms is flagged a morphism without
    re-checking; a composite of verified homomorphisms is re-checked.

    Raises:
        ShapeError: If f.target is not g.source
        ConstructionError: If homomorphisms compose to a non-homomorphism
    """
    if f.target != g.source:
        raise ShapeError(f"Cannot compose {g!r} after {f!r}: target and source differ")
    composite = GeometryMap(f.source, g.target, tuple(g.table[v] for v in f.table))
    if f.morphism and g.morphism:
        composite.morphism = True
    if f.homomorphism and g.homomorphism:
        if not is_homomorphism(composite):
            raise ConstructionError(
                f"Composite of homomorphisms {g!r} and {f!r} is not a homomorphism"
            )
    return composite


def inverse_map(f: GeometryMap) -> GeometryMap:
    """Inverse of a bijective map."""
    if not f.is_bijective():
        raise ShapeError(f"{f!r} is not a bijection")
    table = [0] * f.source.size
    for x, v in enumerate(f.table):
        table[v] = x
    return GeometryMap(f.target, f.source, tuple(table))


def kernel(f: GeometryMap) -> SubsetHandle:
    """
    K_f = { a : f(a) = e_B }, always a subgeometry of the source.

    Raises:
        NotAMorphismError: If f is not a morphism
        ConstructionError: If the kernel is not a subgeometry
    """
    _require_morphism(f)
    k = SubsetHandle(
        f.source, tuple(a for a, v in enumerate(f.table) if v == f.target.identity)
    )
    if not is_subgeometry(f.source, k):
        raise ConstructionError(f"Kernel of {f!r} is not a subgeometry")
    return k


def image(f: GeometryMap) -> SubsetHandle:
    """
    Im f = { f(a) }; whether it is a subgeometry is logged, not asserted.

    Raises:
        NotAMorphismError: If f is not a morphism
    """
    _require_morphism(f)
    im = SubsetHandle(f.target, tuple(set(f.table)))
    logger.debug(
        f"Image computed | map: {f!r} | size: {len(im)} | "
        f"subgeometry: {is_subgeometry(f.target, im)}"
    )
    return im


def check_size(source: Geometry, target: Geometry, limits: SearchLimits | None) -> None:
    """
    Raises:
        SizeLimitError: If |source| or |target| exceeds the limits
    """
    limits = limits or DEFAULT_LIMITS
    if not limits.admits(source.size, target.size):
        raise SizeLimitError(
            f"Map search {source.size} -> {target.size} exceeds limits "
            f"(source <= {limits.max_source}, target <= {limits.max_target})"
        )


def _assignments(
    source: Geometry,
    target: Geometry,
    candidates: list[tuple[int, ...]],
    injective: bool = False,
) -> Iterator[tuple[int, ...]]:
    """
    Depth-first assignment in source index order, values ascending.

    A triple is checked as soon as its largest index is assigned, so the
    yielded tables are exactly the triple-preserving ones, in
    lexicographic order.
    """
    n = source.size
    due: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for triple in source.delta:
        due[max(triple)].append(triple)
    member = target.delta.member
    table = [0] * n
    used: set[int] = set()

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(table)
            return
        for v in candidates[i]:
            if injective and v in used:
                continue
            table[i] = v
            if all(member(table[x], table[y], table[z]) for x, y, z in due[i]):
                used.add(v)
                yield from extend(i + 1)
                used.discard(v)

    yield from extend(0)


def enumerate_maps(
    source: Geometry,
    target: Geometry,
    kind: MapKind | str = MapKind.MORPHISM,
    limits: SearchLimits | None = None,
) -> list[GeometryMap]:
    """
    All maps source -> target of the requested kind, in lexicographic table order.

    Backtracking fixes f(e) = e_B and prunes on any fully assigned triple
    that leaves Δ_B. The lifting condition is checked on completed maps only.

    Raises:
        SizeLimitError: If the search exceeds the limits
    """
    kind = MapKind(kind)
    check_size(source, target, limits)
    every = tuple(range(target.size))
    candidates = [
        (target.identity,) if i == source.identity else every for i in range(source.size)
    ]
    found = []
    for table in _assignments(source, target, candidates):
        f = GeometryMap(source, target, table, morphism=True)
        if kind is MapKind.HOMOMORPHISM and not is_homomorphism(f):
            continue
        found.append(f)
    logger.debug(
        f"Enumerated maps | {source!r} -> {target!r} | kind: {kind.value} | count: {len(found)}"
    )
    return found


def _signature(geometry: Geometry, inv: tuple[int, ...], x: int) -> tuple:
    """Isomorphism invariant of an element."""
    occurrences = Counter()
    for triple in geometry.delta:
        for pos, v in enumerate(triple):
            if v == x:
                occurrences[pos] += 1
    return (
        x == geometry.identity,
        tuple(occurrences[p] for p in range(3)),
        len(geometry.slice(x, x)),
        1 if inv[x] == x else 2,
    )


def find_isomorphism(source: Geometry, target: Geometry) -> GeometryMap | None:
    """
    A bijection f with f and f^-1 both homomorphisms, or None.

    Elements may only map to elements with the same invariants (triple
    participation per position, |slice(x, x)|, involution orbit size).
    """
    if source.size != target.size or len(source.delta) != len(target.delta):
        return None
    inv_a, inv_b = involution_table(source), involution_table(target)
    sig_b: dict[tuple, list[int]] = defaultdict(list)
    for y in range(target.size):
        sig_b[_signature(target, inv_b, y)].append(y)
    candidates = [tuple(sig_b.get(_signature(source, inv_a, x), ())) for x in range(source.size)]
    if any(not c for c in candidates):
        return None

    for table in _assignments(source, target, candidates, injective=True):
        f = GeometryMap(source, target, table, morphism=True)
        if is_homomorphism(f) and is_homomorphism(inverse_map(f)):
            logger.debug(f"Found isomorphism | {f!r}")
            return f
    return None
