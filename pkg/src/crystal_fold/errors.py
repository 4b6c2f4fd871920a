"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`CrystalFoldError`, so callers (and the CLI) can catch one type.
"""


class CrystalFoldError(ValueError):
    pass


class ConfigurationError(CrystalFoldError):
    """Invalid Cartan type or similarity datum."""


class UnsupportedTypeError(ConfigurationError):
    """Raised when computing with metadata-only (affine) catalog entries."""


class AutomorphismError(CrystalFoldError):
    """The permutation does not preserve the Cartan matrix."""


class OrthogonalityError(CrystalFoldError):
    """Two distinct nodes in the same orbit are joined."""


class InvarianceError(CrystalFoldError):
    """A weight is not constant on the orbits of the automorphism."""


class WordError(CrystalFoldError):
    """A word that should be reduced is not, or has invalid letters."""


class DomainError(CrystalFoldError):
    """A weight that should be dominant is not."""


class MembershipError(CrystalFoldError):
    """String extraction did not terminate at the highest element."""


class FixednessError(CrystalFoldError):
    """A crystal element expected to be fixed by the automorphism is not."""


class ShapeError(CrystalFoldError):
    """Vector or matrix dimensions do not match."""


class EmptinessError(CrystalFoldError):
    """A polytope was given with no generators."""
