"""Exception hierarchy shared by all modules."""


class AtomFiberError(Exception):
    """Base class for all errors raised by atomfiber."""


class DimensionError(AtomFiberError, ValueError):
    """Vector or matrix shapes do not agree."""


class EmptyFiberError(AtomFiberError):
    """A fiber that must be nonempty has no lattice points."""


class IncompleteAtomSetError(AtomFiberError):
    """Greedy decomposition left a nonzero residual right-hand side."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class InfeasibleSeedError(AtomFiberError):
    """A completion seed has an empty fiber in the requested mode."""


class CompletionLimitError(AtomFiberError):
    """A completion procedure exceeded its safety limit."""


class InfeasibleError(AtomFiberError):
    """The integer program has no feasible point."""


class UnboundedError(AtomFiberError):
    """The integer program is unbounded below."""
