"""Axiom engine for Pasch geometries.

Axioms 1-4 define a Pasch geometry; properties 5 (reversal) and 6
(totality) follow from them and are checked as a cross-check.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import product as cartesian
from pasch_geometry.core.geometry import Geometry, involution_candidates
from pasch_geometry.exceptions import AxiomViolationError

logger = logging.getLogger(__name__)

AXIOMS = (1, 2, 3, 4)
DERIVED = (5, 6)

AXIOM_TITLES = {
    1: "unique involution",
    2: "involution is an involution",
    3: "cyclic invariance",
    4: "Pasch exchange",
    5: "reversal",
    6: "totality",
}


class AxiomStatus(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'


@dataclass(frozen=True)
class AxiomFailure:
    """One violation; the witness indices replay the violation against Δ."""
    axiom: int
    witness: tuple[int, ...]
    message: str


@dataclass
class AxiomReport:
    """Per-axiom outcome of validate_axioms."""
    geometry: Geometry
    status: dict[int, AxiomStatus]
    failures: list[AxiomFailure] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        """True iff axioms 1-4 all pass."""
        return all(self.status[i] is AxiomStatus.PASS for i in AXIOMS)

    @property
    def derived_pass(self) -> bool:
        return all(self.status[i] is AxiomStatus.PASS for i in DERIVED)

    @property
    def internal_inconsistency(self) -> bool:
        """Axioms hold but a consequence of them does not."""
        return self.all_pass and not self.derived_pass

    def failures_for(self, axiom: int) -> list[AxiomFailure]:
        return [f for f in self.failures if f.axiom == axiom]

    def lines(self) -> list[str]:
        """Human-readable report, one line per axiom then one per failure."""
        out = []
        for axiom in AXIOMS + DERIVED:
            out.append(f"axiom {axiom} ({AXIOM_TITLES[axiom]}): {self.status[axiom].value}")
        for failure in self.failures:
            witness = ' '.join(self.geometry.label(i) for i in failure.witness)
            out.append(f"  axiom {failure.axiom} witness ({witness}): {failure.message}")
        if self.internal_inconsistency:
            out.append("internal inconsistency: derived property failed while axioms 1-4 hold")
        return out


def validate_axioms(geometry: Geometry) -> AxiomReport:
    """
    Check axioms 1-4 and derived properties 5-6, collecting every failure.

    Args:
        geometry: Structurally well-formed geometry

    Returns:
        AxiomReport; never raises for axiom failures
    """
    g = geometry
    delta = g.delta
    n = g.size
    e = g.identity
    failures: list[AxiomFailure] = []
    status: dict[int, AxiomStatus] = {}

    # Axiom 1
    inv: dict[int, int] = {}
    for a in range(n):
        candidates = involution_candidates(g, a)
        if len(candidates) == 1:
            inv[a] = candidates[0]
        else:
            failures.append(AxiomFailure(
                1, (a, *candidates),
                f"{len(candidates)} elements b with (a, b, e) in Δ"
            ))
    status[1] = AxiomStatus.PASS if len(inv) == n else AxiomStatus.FAIL

    # Axiom 2, where # is defined
    count = len(failures)
    if e in inv and inv[e] != e:
        failures.append(AxiomFailure(2, (e, inv[e]), "e# differs from e"))
    for a, b in inv.items():
        if b in inv and inv[b] != a:
            failures.append(AxiomFailure(2, (a, b, inv[b]), "a## differs from a"))
    status[2] = AxiomStatus.PASS if len(failures) == count else AxiomStatus.FAIL

    # Axiom 3
    count = len(failures)
    for a, b, c in delta:
        missing = [t for t in ((b, c, a), (c, a, b)) if not delta.member(*t)]
        if missing:
            shown = ', '.join('(' + ' '.join(g.labelled(t)) + ')' for t in missing)
            failures.append(AxiomFailure(3, (a, b, c), f"missing rotation {shown}"))
    status[3] = AxiomStatus.PASS if len(failures) == count else AxiomStatus.FAIL

    # Axiom 4
    count = len(failures)
    skipped = False
    for a1 in range(n):
        rows = [(b, c) for b in range(n) for c in delta.slice(a1, b)]
        for (a2, a3), (a4, a5) in cartesian(rows, repeat=2):
            if a3 not in inv or a4 not in inv:
                skipped = True
                continue
            first = set(delta.heads(inv[a4], a2))
            if first.isdisjoint(delta.heads(a5, inv[a3])):
                failures.append(AxiomFailure(
                    4, (a1, a2, a3, a4, a5),
                    "no a6 with (a6, a4#, a2) and (a6, a5, a3#) in Δ"
                ))
    if len(failures) > count:
        status[4] = AxiomStatus.FAIL
    else:
        status[4] = AxiomStatus.SKIPPED if skipped else AxiomStatus.PASS

    # Derived 5
    if len(inv) == n:
        count = len(failures)
        for a, b, c in delta:
            if not delta.member(inv[c], inv[b], inv[a]):
                failures.append(AxiomFailure(5, (a, b, c), "(c#, b#, a#) not in Δ"))
        status[5] = AxiomStatus.PASS if len(failures) == count else AxiomStatus.FAIL
    else:
        status[5] = AxiomStatus.SKIPPED

    # Derived 6
    count = len(failures)
    for x, y in cartesian(range(n), repeat=2):
        if not delta.slice(x, y):
            failures.append(AxiomFailure(6, (x, y), "no z with (x, y, z) in Δ"))
    status[6] = AxiomStatus.PASS if len(failures) == count else AxiomStatus.FAIL

    report = AxiomReport(geometry=g, status=status, failures=failures)
    if report.internal_inconsistency:
        logger.error(
            f"Derived property failed on a geometry satisfying axioms 1-4 | "
            f"geometry: {g!r}"
        )
    logger.debug(
        f"Validated axioms | geometry: {g!r} | all_pass: {report.all_pass} | "
        f"failures: {len(failures)}"
    )
    return report


def require_valid(geometry: Geometry) -> Geometry:
    """
    Return the geometry if axioms 1-4 hold.

    Raises:
        AxiomViolationError: With the first failure as message
    """
    report = validate_axioms(geometry)
    if not report.all_pass:
        first = next(f for f in report.failures if f.axiom in AXIOMS)
        raise AxiomViolationError(
            f"{geometry!r} violates axiom {first.axiom} ({AXIOM_TITLES[first.axiom]}): "
            f"{first.message}"
        )
    return geometry
