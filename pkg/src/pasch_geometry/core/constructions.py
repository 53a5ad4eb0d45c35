"""Geometry constructors: trivial, products and the built-in fixture family."""
import logging
from itertools import product as cartesian
from typing import Sequence
from pasch_geometry.core.geometry import Geometry, cyclic_closure
from pasch_geometry.core.groups import (
    cyclic_group_table,
    from_group_table,
    symmetric_group_table,
)
from pasch_geometry.core.triples import TripleSet

logger = logging.getLogger(__name__)


def trivial_geometry(label: str = 'e', name: str | None = '1') -> Geometry:
    """The one-element geometry ({e}, e, {(e, e, e)}), the zero object."""
    return Geometry((label,), 0, TripleSet(1, [(0, 0, 0)]), name)


def product_index(a: int, b: int, right_size: int) -> int:
    """Row-major position of (a, b) in A x B."""
    return a * right_size + b


def product(left: Geometry, right: Geometry, name: str | None = None) -> Geometry:
    """
    The product geometry A x B.

    Elements are ordered row-major, index(a, b) = a·|B| + b, labelled
    "(a,b)"; a triple lies in Δ iff both coordinate triples do.
    """
    m = right.size
    labels = tuple(f"({a},{b})" for a, b in cartesian(left.elements, right.elements))
    triples = [
        (
            product_index(a1, b1, m),
            product_index(a2, b2, m),
            product_index(a3, b3, m),
        )
        for (a1, a2, a3), (b1, b2, b3) in cartesian(left.delta, right.delta)
    ]
    if name is None and left.name and right.name:
        name = f"{left.name}x{right.name}"
    geometry = Geometry(
        labels,
        product_index(left.identity, right.identity, m),
        TripleSet(left.size * m, triples),
        name,
    )
    logger.debug(f"Built product | {left!r} x {right!r} -> {geometry!r}")
    return geometry


def cyclic_geometry(
    n: int,
    labels: Sequence[str] | None = None,
    name: str | None = None,
) -> Geometry:
    """Sharp geometry of Z_n; labels default to "0".."n-1"."""
    return from_group_table(cyclic_group_table(n, labels), name or f"Z{n}")


def klein_geometry(name: str = 'V4') -> Geometry:
    """Klein four geometry Z2 x Z2, labels "(e,e) (e,a) (a,e) (a,a)"."""
    z2 = cyclic_geometry(2, ('e', 'a'))
    return product(z2, z2).renamed(name)


def symmetric_geometry(n: int, name: str | None = None) -> Geometry:
    """Sharp geometry of S_n (n <= 4), labels in cycle notation."""
    return from_group_table(symmetric_group_table(n), name or f"S{n}")


def sign_geometry(name: str = 'L') -> Geometry:
    """
    The two-element non-sharp geometry L = {e, x}.

    Δ is the cyclic closure of (e, e, e), (e, x, x), (x, x, x); it is the
    double coset geometry of S3 over a subgroup of order two.
    """
    triples = cyclic_closure([(0, 0, 0), (0, 1, 1), (1, 1, 1)])
    return Geometry(('e', 'x'), 0, TripleSet(2, triples), name)


def fixture_geometries() -> dict[str, Geometry]:
    """The built-in named fixtures, smallest first."""
    return {
        '1': trivial_geometry(),
        'Z2': cyclic_geometry(2, ('e', 'a')),
        'L': sign_geometry(),
        'Z3': cyclic_geometry(3, ('e', 'a', 'b')),
        'Z4': cyclic_geometry(4),
        'V4': klein_geometry(),
        'Z5': cyclic_geometry(5),
        'Z6': cyclic_geometry(6),
        'S3': symmetric_geometry(3),
    }


def fixture_family(max_size: int = 6) -> list[Geometry]:
    """Built-in fixtures with at most max_size elements, the default cone apexes."""
    return [g for g in fixture_geometries().values() if g.size <= max_size]
