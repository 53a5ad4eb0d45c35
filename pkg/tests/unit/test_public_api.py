"""Tests for top-level pasch_geometry public API."""
import pasch_geometry


def test_top_level_imports():
    """Test that core components are importable from pasch_geometry directly."""
    from pasch_geometry import Geometry, enumerate_maps, load_geometry, validate_axioms

    assert Geometry is not None
    assert callable(enumerate_maps)
    assert callable(load_geometry)
    assert callable(validate_axioms)


def test_all_names_resolve():
    """Test every exported name exists."""
    for name in pasch_geometry.__all__:
        assert hasattr(pasch_geometry, name), name


def test_programmatic_usage():
    """Test the documented programmatic workflow."""
    from pasch_geometry import cyclic_geometry, enumerate_maps, sign_geometry

    z2 = cyclic_geometry(2, ('e', 'a'))
    maps = enumerate_maps(z2, sign_geometry(), kind='homomorphism')

    assert [f.table for f in maps] == [(0, 0)]


def test_text_round_trip():
    """Test parse and serialize are exported together."""
    from pasch_geometry import klein_geometry, parse_geometry, serialize_geometry

    v4 = klein_geometry()

    assert parse_geometry(serialize_geometry(v4)) == v4


def test_version():
    """Test version string."""
    assert pasch_geometry.__version__ == "1.0.0"
