"""Tests for the axiom engine."""
import pytest
from pasch_geometry.core.axioms import AxiomStatus, require_valid, validate_axioms
from pasch_geometry.core.geometry import Geometry, cyclic_closure
from pasch_geometry.core.triples import TripleSet
from pasch_geometry.exceptions import AxiomViolationError
from tests.fixtures.geometries import broken_z2, s3, sign, trivial, z2


def star_geometry() -> Geometry:
    """{e, a, b} with only the triples forced by a# = a and b# = b; axiom 4 fails."""
    triples = cyclic_closure([(0, 0, 0), (0, 1, 1), (0, 2, 2)])
    return Geometry(('e', 'a', 'b'), 0, TripleSet(3, triples), 'star')


@pytest.mark.parametrize("build", [trivial, z2, sign, s3])
def test_fixtures_pass_all_axioms(build):
    """Test the standard fixtures satisfy axioms 1-4 and properties 5-6."""
    report = validate_axioms(build())

    assert report.all_pass
    assert report.derived_pass
    assert report.failures == []
    assert not report.internal_inconsistency


def test_missing_rotation_reported_with_witness():
    """Test axiom 3 names the present triple and the missing rotation."""
    report = validate_axioms(broken_z2())

    assert report.status[3] is AxiomStatus.FAIL
    assert not report.all_pass
    first = report.failures_for(3)[0]
    assert first.witness == (1, 0, 1)
    assert "(e a a)" in first.message


def test_pasch_exchange_failure():
    """Test axiom 4 fails on a relation with too few triples, and totality with it."""
    report = validate_axioms(star_geometry())

    assert report.status[1] is AxiomStatus.PASS
    assert report.status[2] is AxiomStatus.PASS
    assert report.status[3] is AxiomStatus.PASS
    assert report.status[4] is AxiomStatus.FAIL
    assert report.status[6] is AxiomStatus.FAIL
    assert report.failures_for(4)[0].witness == (0, 1, 1, 2, 2)


def test_ambiguous_involution():
    """Test axiom 1 fails when a has two candidates; reversal is then skipped."""
    g = Geometry(('e', 'a'), 0, TripleSet(2, [(0, 0, 0), (1, 0, 0), (1, 1, 0)]))

    report = validate_axioms(g)

    assert report.status[1] is AxiomStatus.FAIL
    assert report.failures_for(1)[0].witness == (1, 0, 1)
    assert report.status[5] is AxiomStatus.SKIPPED


def test_all_failures_collected():
    """Test validation does not stop at the first failure."""
    report = validate_axioms(broken_z2())

    assert len(report.failures_for(3)) == 2


def test_report_lines():
    """Test the human-readable report lists every axiom."""
    lines = validate_axioms(z2()).lines()

    assert lines[0] == "axiom 1 (unique involution): pass"
    assert len(lines) == 6
    assert "axiom 4 (Pasch exchange): pass" in lines


def test_require_valid():
    """Test require_valid passes valid geometries through and raises otherwise."""
    g = z2()

    assert require_valid(g) is g
    with pytest.raises(AxiomViolationError, match="axiom 3"):
        require_valid(broken_z2())
