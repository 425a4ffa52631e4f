"""Exception hierarchy shared by all modules."""


class MoritaError(Exception):
    pass


class DimensionError(MoritaError, ValueError):
    """Vector or matrix lengths do not match."""


class ScalarParseError(MoritaError, ValueError):
    pass


class UnsupportedType(MoritaError, ValueError):
    """Quiver family/rank outside the affine ADE catalog."""


class UnsupportedParameter(MoritaError, ValueError):
    """Parameter outside the range where the orbit decision is implemented."""


class PreconditionError(MoritaError, ValueError):
    pass


class PrimeTooSmall(PreconditionError):
    pass


class NoWitness(MoritaError):
    pass


class NoSuchModule(MoritaError, ValueError):
    pass


class InvalidModule(MoritaError, ValueError):
    pass


class ReflectionIsIdentity(MoritaError):
    """Raised by reflect_module when the parameter vanishes at the vertex.

    In that case the reflection functor is the identity functor.
    """
