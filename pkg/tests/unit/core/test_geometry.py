"""Tests for the Geometry value type and elementwise operations."""
import pytest
from pasch_geometry.core.geometry import (
    Geometry,
    SubsetHandle,
    cyclic_closure,
    hyperproduct,
    involution,
    involution_table,
    is_abelian,
    is_sharp,
    set_hyperproduct,
    subcategory_membership,
)
from pasch_geometry.core.constructions import product
from pasch_geometry.core.triples import TripleSet
from pasch_geometry.exceptions import AxiomViolationError
from tests.fixtures.geometries import s3, sign, z2, z3, z4


def test_from_labels_builds_indexed_relation():
    """Test label triples are translated to index triples."""
    g = Geometry.from_labels(['e', 'a'], 'e', [('e', 'e', 'e'), ('a', 'a', 'e')], name='G')

    assert g.size == 2
    assert g.identity == 0
    assert g.delta.triples == ((0, 0, 0), (1, 1, 0))
    assert g.name == 'G'


def test_from_labels_unknown_label():
    """Test an unknown label is rejected."""
    with pytest.raises(ValueError, match="Unknown element label"):
        Geometry.from_labels(['e'], 'e', [('e', 'e', 'x')])


@pytest.mark.parametrize("labels", [('e', 'e'), ('e', 'a b'), ('e', ''), ('e', 'a#')])
def test_invalid_labels_rejected(labels):
    """Test duplicate labels and labels that are not single tokens."""
    with pytest.raises(ValueError):
        Geometry(labels, 0, TripleSet(2, [(0, 0, 0)]))


def test_identity_out_of_range():
    """Test the identity index must point into the carrier."""
    with pytest.raises(ValueError, match="Identity"):
        Geometry(('e',), 1, TripleSet(1, [(0, 0, 0)]))


def test_relation_size_mismatch():
    """Test the relation must live on the same carrier."""
    with pytest.raises(ValueError, match="carrier"):
        Geometry(('e', 'a'), 0, TripleSet(3, [(0, 0, 0)]))


def test_equality_ignores_name():
    """Test equality is structural and the name takes no part."""
    assert z2() == z2().renamed('other')
    assert hash(z2()) == hash(z2().renamed(None))
    assert z2() != z3()


def test_index_and_label_lookup():
    """Test label/index conversion both ways."""
    g = z3()

    assert g.index('b') == 2
    assert g.label(1) == 'a'
    assert g.labelled((0, 1, 2)) == ('e', 'a', 'b')
    with pytest.raises(KeyError):
        g.index('z')


def test_involution_in_groups():
    """Test a# is the group inverse in sharp geometries."""
    assert involution(z2(), 1) == 1
    assert involution(z3(), 1) == 2
    assert involution_table(z4()) == (0, 3, 2, 1)


def test_involution_missing_candidate():
    """Test an element without candidates raises AxiomViolationError."""
    g = Geometry(('e', 'a'), 0, TripleSet(2, [(0, 0, 0)]))

    with pytest.raises(AxiomViolationError, match="0 involution candidates"):
        involution(g, 1)


def test_abelian_and_sharp_flags():
    """Test the abelian and sharp predicates on the standard fixtures."""
    assert is_abelian(z4()) and is_sharp(z4())
    assert is_abelian(sign()) and not is_sharp(sign())
    assert not is_abelian(s3()) and is_sharp(s3())


@pytest.mark.parametrize("left, sharp", [(s3, True), (sign, False)])
def test_sharp_flag_beyond_dense_threshold(left, sharp):
    """Test is_sharp agrees on carriers with and without the dense table."""
    small = product(left(), z2())
    large = product(left(), product(s3(), product(z3(), z2())))

    assert small.delta.dense is not None
    assert large.delta.dense is None
    assert is_sharp(small) is sharp
    assert is_sharp(large) is sharp


def test_hyperproduct_single_and_set_valued():
    """Test a * b is a singleton in sharp geometries and may not be otherwise."""
    assert hyperproduct(z3(), 1, 1) == frozenset({2})
    assert hyperproduct(sign(), 1, 1) == frozenset({0, 1})
    assert set_hyperproduct(z3(), {1}, {1, 2}) == frozenset({2, 0})


def test_subcategory_membership():
    """Test P1 is abelian and P2 is sharp."""
    assert subcategory_membership(s3()) == {'P1': False, 'P2': True}
    assert subcategory_membership(sign()) == {'P1': True, 'P2': False}


def test_cyclic_closure_adds_rotations():
    """Test every rotation of each triple is added."""
    assert cyclic_closure([(0, 1, 2)]) == {(0, 1, 2), (1, 2, 0), (2, 0, 1)}


def test_subset_handle_sorts_and_checks_range():
    """Test SubsetHandle normalizes members and rejects bad indices."""
    h = SubsetHandle(z4(), (2, 0, 2))

    assert h.members == (0, 2)
    assert h.contains_identity
    assert h.labels == ('0', '2')
    assert 2 in h and 1 not in h
    with pytest.raises(ValueError):
        SubsetHandle(z2(), (5,))


def test_subset_handle_of_labels():
    """Test building a subset from labels."""
    h = SubsetHandle.of_labels(z3(), ['b', 'e'])

    assert h.members == (0, 2)
    assert len(h) == 2
