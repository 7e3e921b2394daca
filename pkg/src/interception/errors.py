"""Exception hierarchy shared by every module."""


class InterceptionError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(InterceptionError, ValueError):
    """Argument outside the domain where the operation is defined."""


class NonConvergent(InterceptionError, ArithmeticError):
    """An iterative method exhausted its budget before meeting tolerance."""


class ConsistencyError(InterceptionError, ArithmeticError):
    """Independent computations of the same quantity disagree."""


class StiffnessOrSingularity(NonConvergent):
    """ODE step size underflowed, usually close to a singularity."""


class DegenerateTangent(InterceptionError, ArithmeticError):
    pass


class DegenerateTriangle(InterceptionError, ValueError):
    pass


class NoSolution(InterceptionError, ValueError):
    """A configuration with the requested constraints does not exist."""


class PoleError(DomainError):
    """Projection evaluated at a pole where it is singular."""


class RootNotFound(InterceptionError, ArithmeticError):
    pass


class DegenerateConfig(DegenerateTriangle):
    """Lemma configuration whose construction lines are parallel or collinear."""
