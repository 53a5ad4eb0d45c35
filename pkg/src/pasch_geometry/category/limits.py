"""Zero object, products, equalizers and pullbacks with universal-property checks.

Universal properties quantify over every object; here they are checked
exhaustively over a finite apex family (ConeCheckSpec). Equalizers and
pullbacks are constructed in the sharp subcategory P2; a diagnostic
override builds the same sets for arbitrary geometries and records which
guarantees survive.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterable
from pasch_geometry.category.config import ConeCheckSpec, MapKind
from pasch_geometry.category.morphisms import (
    GeometryMap,
    compose,
    enumerate_maps,
    find_isomorphism,
    is_homomorphism,
)
from pasch_geometry.core.axioms import validate_axioms
from pasch_geometry.core.config import SearchLimits
from pasch_geometry.core.constructions import product, product_index, trivial_geometry
from pasch_geometry.core.geometry import Geometry, SubsetHandle, is_abelian, is_sharp
from pasch_geometry.core.subgeometry import is_subgeometry, subgeometry_as_geometry
from pasch_geometry.exceptions import (
    ConstructionError,
    NotAMorphismError,
    NotSharpError,
    ShapeError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConeOutcome:
    """Mediating-map count for one cone over one apex."""
    apex: Geometry
    cone: tuple[GeometryMap, ...]
    mediating: int

    @property
    def exists(self) -> bool:
        return self.mediating >= 1

    @property
    def unique(self) -> bool:
        return self.mediating <= 1


@dataclass
class UniversalCheckReport:
    """Outcome of an exhaustive mediating-map search."""
    construction: str
    outcomes: list[ConeOutcome] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Every tested cone has exactly one mediating map and no side check failed."""
        return not self.failures and all(o.mediating == 1 for o in self.outcomes)

    def per_apex(self) -> dict[str, tuple[int, int, int]]:
        """apex name -> (cones, cones with a mediating map, cones with at most one)."""
        summary: dict[str, list[int]] = {}
        for o in self.outcomes:
            row = summary.setdefault(o.apex.name or repr(o.apex), [0, 0, 0])
            row[0] += 1
            row[1] += o.exists
            row[2] += o.unique
        return {k: tuple(v) for k, v in summary.items()}

    def lines(self) -> list[str]:
        out = [f"{self.construction}: {'pass' if self.passed else 'fail'}"]
        for apex, (cones, existing, unique) in self.per_apex().items():
            out.append(f"  apex {apex}: cones {cones}, existence {existing}, uniqueness {unique}")
        for o in self.outcomes:
            if o.mediating != 1:
                cone = '; '.join(' '.join(f"{x}->{y}" for x, y in m.pairs()) for m in o.cone)
                out.append(f"  witness apex {o.apex.name}: cone [{cone}] has {o.mediating} mediating maps")
        out.extend(f"  {failure}" for failure in self.failures)
        return out


def _table_after(outer: GeometryMap, inner: GeometryMap) -> tuple[int, ...]:
    """Table of outer ∘ inner without flag bookkeeping."""
    return tuple(outer.table[v] for v in inner.table)


def _require_homomorphism(f: GeometryMap) -> None:
    if f.homomorphism is None:
        is_homomorphism(f)
    if not f.homomorphism:
        raise NotAMorphismError(f"{f!r} is not a homomorphism")


def _require_sharp(geometries: Iterable[Geometry], allow_non_sharp: bool) -> bool:
    """Whether all inputs are sharp; raises unless the override is set."""
    flat = [g for g in geometries if not is_sharp(g)]
    if flat and not allow_non_sharp:
        raise NotSharpError(
            f"Construction is defined in the sharp subcategory; not sharp: "
            f"{', '.join(repr(g) for g in flat)}"
        )
    return not flat


def _log_checked(report: UniversalCheckReport, message: str) -> None:
    level = logging.INFO if report.passed else logging.WARNING
    logger.log(level, f"{message} | passed: {report.passed}")


def _settle(diagnostics: dict[str, bool], what: str, strict: bool) -> None:
    failed = [name for name, ok in diagnostics.items() if not ok]
    if not failed:
        return
    if strict:
        raise ConstructionError(f"{what}: guaranteed properties failed: {', '.join(failed)}")
    logger.warning(f"{what} on non-sharp input | failed: {', '.join(failed)}")


# Zero object

def terminal_map(geometry: Geometry) -> GeometryMap:
    """The constant homomorphism A -> 1."""
    f = GeometryMap.constant(geometry, trivial_geometry())
    if not is_homomorphism(f):
        raise ConstructionError(f"Terminal map out of {geometry!r} is not a homomorphism")
    return f


def initial_map(geometry: Geometry) -> GeometryMap:
    """The homomorphism 1 -> B sending e to e_B."""
    f = GeometryMap(trivial_geometry(), geometry, (geometry.identity,))
    if not is_homomorphism(f):
        raise ConstructionError(f"Initial map into {geometry!r} is not a homomorphism")
    return f


def check_zero_uniqueness(
    first: Geometry,
    second: Geometry,
    kind: MapKind = MapKind.HOMOMORPHISM,
    limits: SearchLimits | None = None,
) -> UniversalCheckReport:
    """
    Two zero objects are connected by unique maps whose composites are identities.
    """
    report = UniversalCheckReport(f"zero uniqueness {first.name} ~ {second.name}")
    forward = enumerate_maps(second, first, kind, limits)
    backward = enumerate_maps(first, second, kind, limits)
    report.outcomes.append(ConeOutcome(second, (), len(forward)))
    report.outcomes.append(ConeOutcome(first, (), len(backward)))
    if len(forward) == 1 and len(backward) == 1:
        f, g = forward[0], backward[0]
        if compose(f, g).table != GeometryMap.identity(first).table:
            report.failures.append(f"f ∘ g is not the identity of {first.name}")
        if compose(g, f).table != GeometryMap.identity(second).table:
            report.failures.append(f"g ∘ f is not the identity of {second.name}")
    if find_isomorphism(first, second) is None:
        report.failures.append(f"{first.name} and {second.name} are not isomorphic")
    return report


def check_zero_object(
    fixtures: Iterable[Geometry],
    kind: MapKind = MapKind.HOMOMORPHISM,
    limits: SearchLimits | None = None,
) -> UniversalCheckReport:
    """
    Exactly one map A -> 1 and one map 1 -> A for every fixture, and all
    one-element geometries among them are isomorphic.
    """
    fixtures = list(fixtures)
    one = trivial_geometry()
    report = UniversalCheckReport('zero object')
    for geometry in fixtures:
        out_maps = enumerate_maps(geometry, one, kind, limits)
        in_maps = enumerate_maps(one, geometry, kind, limits)
        report.outcomes.append(ConeOutcome(geometry, (), len(out_maps)))
        report.outcomes.append(ConeOutcome(geometry, (), len(in_maps)))
        if out_maps and out_maps[0] != terminal_map(geometry):
            report.failures.append(f"terminal map of {geometry.name} is not the constant map")
        if in_maps and in_maps[0] != initial_map(geometry):
            report.failures.append(f"initial map of {geometry.name} does not send e to e")

    singletons = [g for g in fixtures if g.size == 1]
    for first, second in cartesian(singletons, repeat=2):
        sub = check_zero_uniqueness(first, second, kind, limits)
        report.failures.extend(sub.failures)
    _log_checked(report, f"Checked zero object | fixtures: {len(fixtures)}")
    return report


# Products

@dataclass(frozen=True)
class ProductCone:
    geometry: Geometry
    pi1: GeometryMap
    pi2: GeometryMap


def product_with_projections(left: Geometry, right: Geometry) -> ProductCone:
    """
    A x B with coordinate projections, both homomorphisms.

    Raises:
        ConstructionError: If a projection fails the lifting property
    """
    p = product(left, right)
    m = right.size
    pi1 = GeometryMap(p, left, tuple(i // m for i in range(p.size)))
    pi2 = GeometryMap(p, right, tuple(i % m for i in range(p.size)))
    for pi in (pi1, pi2):
        if not is_homomorphism(pi):
            raise ConstructionError(f"Projection {pi!r} is not a homomorphism")
    return ProductCone(p, pi1, pi2)


def pair_map(q1: GeometryMap, q2: GeometryMap, target: Geometry | None = None) -> GeometryMap:
    """
    q(x) = (q1(x), q2(x)) into q1.target x q2.target.

    Raises:
        ShapeError: If q1 and q2 have different sources
    """
    if q1.source != q2.source:
        raise ShapeError(f"Cannot pair {q1!r} and {q2!r}: sources differ")
    target = target or product(q1.target, q2.target)
    m = q2.target.size
    table = tuple(product_index(a, b, m) for a, b in zip(q1.table, q2.table))
    return GeometryMap(q1.source, target, table)


def check_product_universal(
    left: Geometry, right: Geometry, spec: ConeCheckSpec
) -> UniversalCheckReport:
    """
    For every apex D and every cone (q1: D -> A, q2: D -> B), count the
    maps q: D -> A x B with π1 ∘ q = q1 and π2 ∘ q = q2.
    """
    cone = product_with_projections(left, right)
    report = UniversalCheckReport(f"product {left.name} x {right.name}")
    for apex in spec.apexes:
        firsts = enumerate_maps(apex, left, spec.map_kind, spec.limits)
        seconds = enumerate_maps(apex, right, spec.map_kind, spec.limits)
        mediators = Counter(
            (_table_after(cone.pi1, q), _table_after(cone.pi2, q))
            for q in enumerate_maps(apex, cone.geometry, spec.map_kind, spec.limits)
        )
        for q1, q2 in cartesian(firsts, seconds):
            count = mediators[(q1.table, q2.table)]
            report.outcomes.append(ConeOutcome(apex, (q1, q2), count))
    _log_checked(report, f"Checked {report.construction} | cones: {len(report.outcomes)}")
    return report


# Equalizers

@dataclass(frozen=True)
class Equalizer:
    """E = { x : f(x) = g(x) } with its inclusion into A."""
    subset: SubsetHandle
    geometry: Geometry
    inclusion: GeometryMap
    diagnostics: dict[str, bool]


def equalizer(f: GeometryMap, g: GeometryMap, allow_non_sharp: bool = False) -> Equalizer:
    """
    Equalizer of a parallel pair of homomorphisms in P2.

    Raises:
        ShapeError: If f and g are not parallel
        NotAMorphismError: If f or g is not a homomorphism
        NotSharpError: If an input is not sharp and the override is not set
        ConstructionError: If a guaranteed property fails on sharp inputs
    """
    if f.source != g.source or f.target != g.target:
        raise ShapeError(f"{f!r} and {g!r} are not a parallel pair")
    _require_homomorphism(f)
    _require_homomorphism(g)
    sharp = _require_sharp((f.source, f.target), allow_non_sharp)

    a = f.source
    subset = SubsetHandle(a, tuple(x for x in range(a.size) if f.table[x] == g.table[x]))
    geometry = subgeometry_as_geometry(subset, name='E')
    inclusion = GeometryMap(geometry, a, subset.members)
    diagnostics = {
        'subgeometry': is_subgeometry(a, subset),
        'axioms': validate_axioms(geometry).all_pass,
        'inclusion_homomorphism': is_homomorphism(inclusion),
        'commutes': _table_after(f, inclusion) == _table_after(g, inclusion),
    }
    _settle(diagnostics, 'equalizer', strict=sharp)
    logger.info(f"Built equalizer | E: {list(subset.labels)} | sharp inputs: {sharp}")
    return Equalizer(subset, geometry, inclusion, diagnostics)


def check_equalizer_universal(
    f: GeometryMap,
    g: GeometryMap,
    spec: ConeCheckSpec,
    allow_non_sharp: bool = False,
) -> UniversalCheckReport:
    """
    For every apex E' and every k: E' -> A with f ∘ k = g ∘ k, count the
    maps h: E' -> E with i ∘ h = k; also check Im(k) lies in E.
    """
    eq = equalizer(f, g, allow_non_sharp)
    report = UniversalCheckReport(f"equalizer over {f.source.name}")
    members = set(eq.subset.members)
    for apex in spec.apexes:
        mediators = Counter(
            _table_after(eq.inclusion, h)
            for h in enumerate_maps(apex, eq.geometry, spec.map_kind, spec.limits)
        )
        for k in enumerate_maps(apex, f.source, spec.map_kind, spec.limits):
            if _table_after(f, k) != _table_after(g, k):
                continue
            if not members.issuperset(k.table):
                report.failures.append(f"Im(k) not inside E for {k!r}")
            report.outcomes.append(ConeOutcome(apex, (k,), mediators[k.table]))
    _log_checked(report, f"Checked {report.construction} | cones: {len(report.outcomes)}")
    return report


# Pullbacks

@dataclass(frozen=True)
class Pullback:
    """Y = { (a, b) : f(a) = g(b) } inside A x B, with its two legs."""
    geometry: Geometry
    alpha: GeometryMap
    beta: GeometryMap
    support: SubsetHandle
    diagnostics: dict[str, bool]

    @property
    def inclusion(self) -> GeometryMap:
        """Y -> A x B."""
        return GeometryMap(self.geometry, self.support.parent, self.support.members)


def pullback(f: GeometryMap, g: GeometryMap, allow_non_sharp: bool = False) -> Pullback:
    """
    Pullback of a cospan f: A -> X, g: B -> X of homomorphisms in P2.

    Raises:
        ShapeError: If f and g do not share a target
        NotAMorphismError: If f or g is not a homomorphism
        NotSharpError: If an input is not sharp and the override is not set
        ConstructionError: If a guaranteed property fails on sharp inputs
    """
    if f.target != g.target:
        raise ShapeError(f"{f!r} and {g!r} do not form a cospan")
    _require_homomorphism(f)
    _require_homomorphism(g)
    sharp = _require_sharp((f.source, g.source, f.target), allow_non_sharp)

    left, right = f.source, g.source
    m = right.size
    ambient = product(left, right)
    support = SubsetHandle(ambient, tuple(
        product_index(a, b, m)
        for a, b in cartesian(range(left.size), range(m))
        if f.table[a] == g.table[b]
    ))
    geometry = subgeometry_as_geometry(support, name='Y')
    alpha = GeometryMap(geometry, left, tuple(i // m for i in support.members))
    beta = GeometryMap(geometry, right, tuple(i % m for i in support.members))
    diagnostics = {
        'subgeometry': is_subgeometry(ambient, support),
        'axioms': validate_axioms(geometry).all_pass,
        'alpha_homomorphism': is_homomorphism(alpha),
        'beta_homomorphism': is_homomorphism(beta),
        'commutes': _table_after(f, alpha) == _table_after(g, beta),
    }
    _settle(diagnostics, 'pullback', strict=sharp)
    logger.info(f"Built pullback | Y: {geometry.size} elements | sharp inputs: {sharp}")
    return Pullback(geometry, alpha, beta, support, diagnostics)


def check_pullback_universal(
    f: GeometryMap,
    g: GeometryMap,
    spec: ConeCheckSpec,
    allow_non_sharp: bool = False,
) -> UniversalCheckReport:
    """
    For every apex Z and every pair f': Z -> A, g': Z -> B with
    f ∘ f' = g ∘ g', count the maps ε: Z -> Y with α ∘ ε = f' and β ∘ ε = g'.
    """
    pb = pullback(f, g, allow_non_sharp)
    report = UniversalCheckReport(f"pullback over {f.target.name}")
    for apex in spec.apexes:
        mediators = Counter(
            (_table_after(pb.alpha, eps), _table_after(pb.beta, eps))
            for eps in enumerate_maps(apex, pb.geometry, spec.map_kind, spec.limits)
        )
        firsts = enumerate_maps(apex, f.source, spec.map_kind, spec.limits)
        seconds = enumerate_maps(apex, g.source, spec.map_kind, spec.limits)
        for f1, g1 in cartesian(firsts, seconds):
            if _table_after(f, f1) != _table_after(g, g1):
                continue
            count = mediators[(f1.table, g1.table)]
            report.outcomes.append(ConeOutcome(apex, (f1, g1), count))
    _log_checked(report, f"Checked {report.construction} | cones: {len(report.outcomes)}")
    return report


# Subcategories P1 (abelian) and P2 (sharp)

def check_subcategory_closure(
    fixtures: Iterable[Geometry],
    limits: SearchLimits | None = None,
) -> UniversalCheckReport:
    """
    P1 and P2 are subcategories: identities are homomorphisms, composites of
    homomorphisms between members are homomorphisms, and products of
    members stay members.
    """
    fixtures = list(fixtures)
    report = UniversalCheckReport('subcategories P1, P2')
    homs: dict[tuple[int, int], list[GeometryMap]] = {}

    def hom(i: int, j: int) -> list[GeometryMap]:
        if (i, j) not in homs:
            homs[(i, j)] = enumerate_maps(fixtures[i], fixtures[j], MapKind.HOMOMORPHISM, limits)
        return homs[(i, j)]

    for name, member in (('P1', is_abelian), ('P2', is_sharp)):
        inside = [i for i, g in enumerate(fixtures) if member(g)]
        for i in inside:
            if not is_homomorphism(GeometryMap.identity(fixtures[i])):
                report.failures.append(f"{name}: identity of {fixtures[i].name} is not a homomorphism")
        for i, j in cartesian(inside, repeat=2):
            if not member(product(fixtures[i], fixtures[j])):
                report.failures.append(
                    f"{name}: product {fixtures[i].name} x {fixtures[j].name} leaves {name}"
                )
        for i, j, k in cartesian(inside, repeat=3):
            for f, g in cartesian(hom(i, j), hom(j, k)):
                composite = GeometryMap(fixtures[i], fixtures[k], _table_after(g, f))
                if not is_homomorphism(composite):
                    report.failures.append(f"{name}: composite {g!r} ∘ {f!r} is not a homomorphism")
    _log_checked(report, f"Checked subcategory closure | fixtures: {len(fixtures)}")
    return report
