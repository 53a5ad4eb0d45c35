"""Pydantic models for categorical checks."""
from enum import Enum
from pydantic import BaseModel, ConfigDict, Field, field_validator
from pasch_geometry.core.axioms import validate_axioms
from pasch_geometry.core.config import SearchLimits
from pasch_geometry.core.constructions import fixture_family
from pasch_geometry.core.geometry import Geometry


class MapKind(str, Enum):
    """Arrows of category P (homomorphisms) or the diagnostic morphism variant."""
    MORPHISM = 'morphism'
    HOMOMORPHISM = 'homomorphism'


class ConeCheckSpec(BaseModel):
    """Finite family of test objects standing in for "every object D"."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    apexes: list[Geometry] = Field(default_factory=list)
    map_kind: MapKind = MapKind.HOMOMORPHISM
    limits: SearchLimits = Field(default_factory=SearchLimits)

    @field_validator('apexes')
    @classmethod
    def _apexes_are_geometries(cls, apexes: list[Geometry]) -> list[Geometry]:
        for apex in apexes:
            if not validate_axioms(apex).all_pass:
                raise ValueError(f"Apex {apex!r} violates the Pasch axioms")
        return apexes

    @classmethod
    def default(cls, max_size: int = 6, **kwargs) -> 'ConeCheckSpec':
        """Spec over the built-in fixtures with at most max_size elements."""
        return cls(apexes=fixture_family(max_size), **kwargs)
