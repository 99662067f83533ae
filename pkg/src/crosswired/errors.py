"""Exception types shared across the package."""


class InvalidDigitError(ValueError):
    """A tree digit outside {0, ..., arity-1}."""


class IncompatibleTreesError(ValueError):
    """Vertices of trees with different arities were combined."""


class InvalidRadiusError(ValueError):
    """A negative or otherwise unusable ball radius."""


class AlignmentError(ValueError):
    """A height not divisible by the collapse step."""


class ModulusMismatchError(ValueError):
    """Elements over different moduli were combined."""


class InvalidModulusError(ValueError):
    """A modulus that is not an admissible prime."""


class ParseError(ValueError):
    """Rejected (non-canonical or malformed) serialized form."""


class MappingDomainError(ValueError):
    """A vertex correspondence is undefined on some source vertex."""

    def __init__(self, vertex):
        super().__init__(f"correspondence undefined on vertex {vertex!r}")
        self.vertex = vertex


class UncertifiedPresentationError(RuntimeError):
    """A construction that requires index certificates was called without
    one; run verify_conditions (or certify_transversals) first."""


class InconclusiveError(RuntimeError):
    """A verification sweep could neither confirm nor refute a hypothesis
    at the given truncation."""
