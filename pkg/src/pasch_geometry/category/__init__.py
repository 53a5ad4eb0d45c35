"""Maps between geometries and the categorical constructions over them."""
from pasch_geometry.category.config import ConeCheckSpec, MapKind
from pasch_geometry.category.morphisms import (
    GeometryMap,
    is_morphism,
    is_homomorphism,
    morphism_violation,
    homomorphism_violation,
    compose,
    inverse_map,
    kernel,
    image,
    enumerate_maps,
    find_isomorphism,
)
from pasch_geometry.category.limits import (
    UniversalCheckReport,
    ConeOutcome,
    ProductCone,
    Equalizer,
    Pullback,
    terminal_map,
    initial_map,
    check_zero_object,
    check_zero_uniqueness,
    product_with_projections,
    pair_map,
    check_product_universal,
    equalizer,
    check_equalizer_universal,
    pullback,
    check_pullback_universal,
    check_subcategory_closure,
)
from pasch_geometry.category.congruence import (
    HomClass,
    CongruenceReport,
    conjugate_map,
    are_equivalent,
    hyper_equivalent,
    equivalence_classes,
    verify_congruence,
    quotient_compose,
)

__all__ = [
    'ConeCheckSpec',
    'MapKind',
    'GeometryMap',
    'is_morphism',
    'is_homomorphism',
    'morphism_violation',
    'homomorphism_violation',
    'compose',
    'inverse_map',
    'kernel',
    'image',
    'enumerate_maps',
    'find_isomorphism',
    'UniversalCheckReport',
    'ConeOutcome',
    'ProductCone',
    'Equalizer',
    'Pullback',
    'terminal_map',
    'initial_map',
    'check_zero_object',
    'check_zero_uniqueness',
    'product_with_projections',
    'pair_map',
    'check_product_universal',
    'equalizer',
    'check_equalizer_universal',
    'pullback',
    'check_pullback_universal',
    'check_subcategory_closure',
    'HomClass',
    'CongruenceReport',
    'conjugate_map',
    'are_equivalent',
    'hyper_equivalent',
    'equivalence_classes',
    'verify_congruence',
    'quotient_compose',
]
