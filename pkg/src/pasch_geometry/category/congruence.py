"""Conjugacy of homomorphisms and the quotient category P/~.

f ~ g iff f(a) = b·g(a)·b# for some b in the target and every a. The
product is the group product of a sharp target, so ~ is only defined for
sharp targets; hyper_equivalent is an experimental set-valued variant
without any equivalence-relation guarantee.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable
from pasch_geometry.category.config import MapKind
from pasch_geometry.category.morphisms import GeometryMap, compose, enumerate_maps
from pasch_geometry.core.config import SearchLimits
from pasch_geometry.core.geometry import Geometry, involution, is_sharp, set_hyperproduct
from pasch_geometry.core.groups import CayleyTable, to_group_table
from pasch_geometry.exceptions import ConstructionError, NotSharpError, ShapeError

logger = logging.getLogger(__name__)

Table = tuple[int, ...]


@lru_cache(maxsize=128)
def _group_of(geometry: Geometry) -> CayleyTable:
    if not is_sharp(geometry):
        raise NotSharpError(f"Conjugation needs a sharp target, {geometry!r} is not sharp")
    return to_group_table(geometry)


def _conjugate_table(group: CayleyTable, b: int, table: Table) -> Table:
    b_inv = group.inverse(b)
    return tuple(group.mul(group.mul(b, v), b_inv) for v in table)


def _orbit(g: GeometryMap) -> frozenset[Table]:
    group = _group_of(g.target)
    return frozenset(_conjugate_table(group, b, g.table) for b in range(group.size))


def conjugate_map(b: int, g: GeometryMap) -> GeometryMap:
    """
    The map a -> b·g(a)·b#.

    Raises:
        NotSharpError: If the target is not sharp
    """
    group = _group_of(g.target)
    return GeometryMap(g.source, g.target, _conjugate_table(group, b, g.table))


def _require_same_shape(f: GeometryMap, g: GeometryMap) -> None:
    if f.source != g.source or f.target != g.target:
        raise ShapeError(f"{f!r} and {g!r} do not share source and target")


def are_equivalent(f: GeometryMap, g: GeometryMap, experimental_hyper: bool = False) -> bool:
    """
    True iff f = conjugate_map(b, g) for some b in the target.

    With experimental_hyper the set-valued variant is used instead, see
    hyper_equivalent.

    Raises:
        ShapeError: If f and g differ in source or target
        NotSharpError: If the target is not sharp (standard variant only)
    """
    _require_same_shape(f, g)
    if experimental_hyper:
        return hyper_equivalent(f, g)
    return f.table in _orbit(g)


def hyper_equivalent(f: GeometryMap, g: GeometryMap) -> bool:
    """
    Experimental: some b has f(a) in (b * g(a)) * b# for every a, with
    hyperproducts as set products. Defined for any target; not known to be
    an equivalence relation.
    """
    _require_same_shape(f, g)
    target = f.target
    for b in range(target.size):
        b_inv = involution(target, b)
        if all(
            f.table[a] in set_hyperproduct(target, set_hyperproduct(target, {b}, {g.table[a]}), {b_inv})
            for a in range(f.source.size)
        ):
            return True
    return False


@dataclass(frozen=True)
class HomClass:
    """An equivalence class [f] inside Hom(A, B), representative lexicographically least."""
    source: Geometry
    target: Geometry
    representative: GeometryMap
    members: tuple[GeometryMap, ...]

    def __contains__(self, f: object) -> bool:
        return f in self.members

    def __len__(self) -> int:
        return len(self.members)


def _class_of(f: GeometryMap) -> HomClass:
    """[f] as the conjugation orbit of f."""
    tables = sorted(_orbit(f))
    members = tuple(GeometryMap(f.source, f.target, t) for t in tables)
    return HomClass(f.source, f.target, members[0], members)


def equivalence_classes(
    source: Geometry,
    target: Geometry,
    limits: SearchLimits | None = None,
) -> list[HomClass]:
    """
    Partition of Hom(A, B) under ~, classes ordered by representative.

    Raises:
        NotSharpError: If the target is not sharp
        SizeLimitError: If the enumeration exceeds the limits
        ConstructionError: If a conjugate of a homomorphism is not one
    """
    _group_of(target)
    homs = enumerate_maps(source, target, MapKind.HOMOMORPHISM, limits)
    known = {h.table: h for h in homs}
    assigned: set[Table] = set()
    classes = []
    for h in homs:
        if h.table in assigned:
            continue
        orbit = sorted(_orbit(h))
        stray = [t for t in orbit if t not in known]
        if stray:
            raise ConstructionError(f"Conjugate {stray[0]} of {h!r} is not a homomorphism")
        members = tuple(known[t] for t in orbit)
        assigned.update(orbit)
        classes.append(HomClass(source, target, members[0], members))
    logger.debug(
        f"Equivalence classes | {source!r} -> {target!r} | homs: {len(homs)} | "
        f"classes: {len(classes)}"
    )
    return classes


@dataclass
class CongruenceReport:
    """Exhaustive check that ~ is an equivalence relation compatible with composition."""
    checked_pairs: int = 0
    checked_composites: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [
            f"congruence: {'pass' if self.passed else 'fail'}",
            f"  related pairs checked: {self.checked_pairs}",
            f"  composites checked: {self.checked_composites}",
        ]
        out.extend(f"  {failure}" for failure in self.failures)
        return out


def _check_equivalence(homs: list[GeometryMap], report: CongruenceReport) -> None:
    orbits = [_orbit(h) for h in homs]
    k = len(homs)
    related = [[homs[i].table in orbits[j] for j in range(k)] for i in range(k)]
    report.checked_pairs += k * k
    for i in range(k):
        if not related[i][i]:
            report.failures.append(f"not reflexive at {homs[i]!r}")
    for i, j in cartesian(range(k), repeat=2):
        if related[i][j] != related[j][i]:
            report.failures.append(f"not symmetric at {homs[i]!r}, {homs[j]!r}")
    for i, j, m in cartesian(range(k), repeat=3):
        if related[i][j] and related[j][m] and not related[i][m]:
            report.failures.append(
                f"not transitive at {homs[i]!r}, {homs[j]!r}, {homs[m]!r}"
            )


def verify_congruence(
    triples: Iterable[tuple[Geometry, Geometry, Geometry]],
    limits: SearchLimits | None = None,
) -> CongruenceReport:
    """
    For each composable (A, B, C): ~ is reflexive, symmetric and transitive
    on Hom(A, B) and Hom(B, C), and f ~ f', g ~ g' imply g∘f ~ g'∘f'.

    Raises:
        NotSharpError: If B or C is not sharp
        SizeLimitError: If an enumeration exceeds the limits
    """
    report = CongruenceReport()
    hom_sets: dict[tuple[Geometry, Geometry], list[GeometryMap]] = {}
    seen_relations: set[tuple[Geometry, Geometry]] = set()

    def homs(a: Geometry, b: Geometry) -> list[GeometryMap]:
        if (a, b) not in hom_sets:
            _group_of(b)
            hom_sets[(a, b)] = enumerate_maps(a, b, MapKind.HOMOMORPHISM, limits)
        if (a, b) not in seen_relations:
            seen_relations.add((a, b))
            _check_equivalence(hom_sets[(a, b)], report)
        return hom_sets[(a, b)]

    for a, b, c in triples:
        firsts = homs(a, b)
        seconds = homs(b, c)
        first_orbits = {f.table: _orbit(f) for f in firsts}
        second_orbits = {g.table: _orbit(g) for g in seconds}
        for f, f2 in cartesian(firsts, repeat=2):
            if f.table not in first_orbits[f2.table]:
                continue
            for g, g2 in cartesian(seconds, repeat=2):
                if g.table not in second_orbits[g2.table]:
                    continue
                report.checked_composites += 1
                left, right = compose(g, f), compose(g2, f2)
                if left.table not in _orbit(right):
                    report.failures.append(
                        f"composites not equivalent: {g!r} ∘ {f!r} vs {g2!r} ∘ {f2!r}"
                    )
    logger.log(
        logging.INFO if report.passed else logging.WARNING,
        f"Verified congruence | composites: {report.checked_composites} | passed: {report.passed}",
    )
    return report


def quotient_compose(gclass: HomClass, fclass: HomClass) -> HomClass:
    """
    [g] ∘ [f] = [g ∘ f] in P/~, checked for every choice of representatives.

    Raises:
        ShapeError: If fclass.target is not gclass.source
        ConstructionError: If the result depends on the representatives
    """
    if fclass.target != gclass.source:
        raise ShapeError("Classes are not composable: target and source differ")
    result = _class_of(compose(gclass.representative, fclass.representative))
    tables = {m.table for m in result.members}
    for g, f in cartesian(gclass.members, fclass.members):
        composite = compose(g, f)
        if composite.table not in tables:
            raise ConstructionError(
                f"Quotient composition depends on representatives: {g!r} ∘ {f!r}"
            )
    return result
