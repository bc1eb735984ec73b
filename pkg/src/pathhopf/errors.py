"""Exception hierarchy shared by all pathhopf modules."""


class PathHopfError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(PathHopfError):
    """Malformed graph input or violated graph invariant."""


class ConvergenceError(PathHopfError):
    """An iterative solver failed to converge within its iteration cap."""


class CutoffError(PathHopfError):
    """A requested computation would exceed the configured path-length cutoff."""


class SingularSystemError(PathHopfError):
    """The tridiagonal splitting system is (near-)singular; the input is
    inconsistent with the graph's maximum essential length."""


class BasisError(PathHopfError):
    """An essential-basis precondition failed (empty basis, or a matrix
    element that should be basis-independent is not)."""
