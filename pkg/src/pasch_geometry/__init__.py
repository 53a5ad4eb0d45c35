"""
pasch-geometry - Finite Pasch geometries, their morphisms and categorical constructions.

Example programmatic usage:

    from pasch_geometry import cyclic_geometry, sign_geometry, enumerate_maps

    z2 = cyclic_geometry(2, ('e', 'a'))
    maps = enumerate_maps(z2, sign_geometry(), kind='homomorphism')

Example file usage:

    from pasch_geometry import load_geometry, validate_axioms

    report = validate_axioms(load_geometry(Path("z2.pg")))
    print('\\n'.join(report.lines()))
"""

from pasch_geometry.core import (
    Geometry,
    SubsetHandle,
    TripleSet,
    CayleyTable,
    AxiomReport,
    validate_axioms,
    require_valid,
    involution,
    is_abelian,
    is_sharp,
    hyperproduct,
    is_subgeometry,
    generated_subgeometry,
    is_normal,
    from_group_table,
    to_group_table,
    double_coset_geometry,
    trivial_geometry,
    product,
    cyclic_geometry,
    klein_geometry,
    symmetric_geometry,
    sign_geometry,
    fixture_family,
    PaschSettings,
    SearchLimits,
    load_settings_from_yaml,
)
from pasch_geometry.category import (
    GeometryMap,
    MapKind,
    ConeCheckSpec,
    is_morphism,
    is_homomorphism,
    compose,
    kernel,
    image,
    enumerate_maps,
    find_isomorphism,
    product_with_projections,
    equalizer,
    pullback,
    equivalence_classes,
    are_equivalent,
)
from pasch_geometry.utils import (
    parse_geometry,
    serialize_geometry,
    parse_map,
    serialize_map,
    load_geometry,
    load_map,
)

__version__ = "1.0.0"

__all__ = [
    'Geometry',
    'SubsetHandle',
    'TripleSet',
    'CayleyTable',
    'AxiomReport',
    'validate_axioms',
    'require_valid',
    'involution',
    'is_abelian',
    'is_sharp',
    'hyperproduct',
    'is_subgeometry',
    'generated_subgeometry',
    'is_normal',
    'from_group_table',
    'to_group_table',
    'double_coset_geometry',
    'trivial_geometry',
    'product',
    'cyclic_geometry',
    'klein_geometry',
    'symmetric_geometry',
    'sign_geometry',
    'fixture_family',
    'PaschSettings',
    'SearchLimits',
    'load_settings_from_yaml',
    'GeometryMap',
    'MapKind',
    'ConeCheckSpec',
    'is_morphism',
    'is_homomorphism',
    'compose',
    'kernel',
    'image',
    'enumerate_maps',
    'find_isomorphism',
    'product_with_projections',
    'equalizer',
    'pullback',
    'equivalence_classes',
    'are_equivalent',
    'parse_geometry',
    'serialize_geometry',
    'parse_map',
    'serialize_map',
    'load_geometry',
    'load_map',
]
