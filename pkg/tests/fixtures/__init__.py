"""Shared geometry, map and text fixtures for pasch-geometry tests."""
