"""Core value types, axiom engine and constructions."""
from pasch_geometry.core.triples import TripleSet, DENSE_THRESHOLD
from pasch_geometry.core.geometry import (
    Geometry,
    SubsetHandle,
    cyclic_closure,
    involution,
    involution_table,
    is_abelian,
    is_sharp,
    hyperproduct,
    set_hyperproduct,
    subcategory_membership,
)
from pasch_geometry.core.axioms import (
    AxiomReport,
    AxiomFailure,
    AxiomStatus,
    validate_axioms,
    require_valid,
)
from pasch_geometry.core.groups import (
    CayleyTable,
    validate_group_table,
    from_group_table,
    to_group_table,
    cyclic_group_table,
    klein_group_table,
    symmetric_group_table,
    double_coset_geometry,
    group_homomorphisms,
)
from pasch_geometry.core.subgeometry import (
    is_subgeometry,
    generated_subgeometry,
    is_normal,
    subgeometry_as_geometry,
)
from pasch_geometry.core.constructions import (
    trivial_geometry,
    product,
    cyclic_geometry,
    klein_geometry,
    symmetric_geometry,
    sign_geometry,
    fixture_geometries,
    fixture_family,
)
from pasch_geometry.core.config import (
    PaschSettings,
    SearchLimits,
    LoggingSettings,
    load_settings_from_yaml,
)

__all__ = [
    'TripleSet',
    'DENSE_THRESHOLD',
    'Geometry',
    'SubsetHandle',
    'cyclic_closure',
    'involution',
    'involution_table',
    'is_abelian',
    'is_sharp',
    'hyperproduct',
    'set_hyperproduct',
    'subcategory_membership',
    'AxiomReport',
    'AxiomFailure',
    'AxiomStatus',
    'validate_axioms',
    'require_valid',
    'CayleyTable',
    'validate_group_table',
    'from_group_table',
    'to_group_table',
    'cyclic_group_table',
    'klein_group_table',
    'symmetric_group_table',
    'double_coset_geometry',
    'group_homomorphisms',
    'is_subgeometry',
    'generated_subgeometry',
    'is_normal',
    'subgeometry_as_geometry',
    'trivial_geometry',
    'product',
    'cyclic_geometry',
    'klein_geometry',
    'symmetric_geometry',
    'sign_geometry',
    'fixture_geometries',
    'fixture_family',
    'PaschSettings',
    'SearchLimits',
    'LoggingSettings',
    'load_settings_from_yaml',
]
