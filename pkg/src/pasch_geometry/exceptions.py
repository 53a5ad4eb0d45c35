"""Exception hierarchy for pasch-geometry."""


class PaschGeometryError(Exception):
    """Base exception for all pasch-geometry errors."""
    pass


class ConfigurationError(PaschGeometryError):
    """Settings validation failed."""
    pass


class ParseError(PaschGeometryError):
    """Geometry or map text could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"{message} at line {line_number}"
        super().__init__(message)


class ShapeError(PaschGeometryError):
    """Maps or geometries do not fit together (source/target mismatch)."""
    pass


class GroupTableError(PaschGeometryError):
    """A Cayley table failed a group axiom."""

    def __init__(self, axiom: str, witness: tuple = ()):
        self.axiom = axiom
        self.witness = witness
        message = axiom if not witness else f"{axiom}: witness {witness}"
        super().__init__(message)


class AxiomViolationError(PaschGeometryError):
    """An operation needs an axiom the geometry does not satisfy."""
    pass


class NotSharpError(PaschGeometryError):
    """Operation requires a sharp geometry."""
    pass


class NotAMorphismError(PaschGeometryError):
    """A map required to be a morphism or homomorphism is not one."""
    pass


class SizeLimitError(PaschGeometryError):
    """Exhaustive search would exceed the configured size limits."""
    pass


class ConstructionError(PaschGeometryError):
    """A guaranteed property of a construction did not hold."""
    pass
