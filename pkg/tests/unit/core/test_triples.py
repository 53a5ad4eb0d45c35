"""Tests for the triple relation store."""
import pytest
from pasch_geometry.core.triples import DENSE_THRESHOLD, TripleSet


def test_triples_are_deduplicated_and_sorted():
    """Test triples come back unique and in lexicographic order."""
    ts = TripleSet(3, [(2, 1, 0), (0, 1, 2), (2, 1, 0), (0, 0, 0)])

    assert ts.triples == ((0, 0, 0), (0, 1, 2), (2, 1, 0))
    assert len(ts) == 3


def test_out_of_range_triple_rejected():
    """Test an index outside the carrier raises ValueError."""
    with pytest.raises(ValueError, match="out of range"):
        TripleSet(2, [(0, 1, 2)])


def test_empty_carrier_rejected():
    """Test a carrier needs at least one element."""
    with pytest.raises(ValueError):
        TripleSet(0, [])


def test_membership_dense_and_contains():
    """Test member() and the in operator agree on small carriers."""
    ts = TripleSet(2, [(0, 1, 1), (1, 1, 0)])

    assert ts.dense is not None
    assert ts.member(0, 1, 1)
    assert not ts.member(1, 0, 1)
    assert (1, 1, 0) in ts
    assert (1, 1) not in ts
    assert (5, 0, 0) not in ts


def test_membership_sparse_above_threshold():
    """Test large carriers fall back to binary search membership."""
    n = DENSE_THRESHOLD + 1
    ts = TripleSet(n, [(0, 0, 0), (n - 1, 3, 7)])

    assert ts.dense is None
    assert ts.member(n - 1, 3, 7)
    assert not ts.member(n - 1, 3, 6)


def test_slice_and_heads():
    """Test slicing by the first two and the last two coordinates."""
    ts = TripleSet(3, [(0, 1, 2), (0, 1, 0), (2, 1, 2)])

    assert ts.slice(0, 1) == (0, 2)
    assert ts.slice(1, 1) == ()
    assert ts.heads(1, 2) == (0, 2)


def test_restrict_reindexes_members():
    """Test restriction keeps only triples inside the subset, re-indexed."""
    ts = TripleSet(4, [(0, 0, 0), (0, 2, 2), (2, 2, 0), (1, 2, 3)])

    restricted = ts.restrict([2, 0])

    assert restricted.size == 2
    assert restricted.triples == ((0, 0, 0), (0, 1, 1), (1, 1, 0))


def test_equality_and_hash():
    """Test equal relations compare and hash equal regardless of input order."""
    a = TripleSet(2, [(0, 0, 0), (1, 1, 0)])
    b = TripleSet(2, [(1, 1, 0), (0, 0, 0)])

    assert a == b
    assert hash(a) == hash(b)
    assert a != TripleSet(3, [(0, 0, 0), (1, 1, 0)])
