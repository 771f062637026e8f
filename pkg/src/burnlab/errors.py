"""Exception types shared across the package."""


class BurnlabError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(BurnlabError):
    """Malformed graph/schedule text or inconsistent header counts."""


class GraphClassError(BurnlabError):
    """Input graph is not in the class an algorithm requires."""


class ScheduleError(BurnlabError):
    """A burning schedule violates the process rules (duplicate or
    already-burned source, bad vertex id)."""


class AssemblyError(BurnlabError):
    """Center placement cannot meet the required radii within the target
    schedule length, or the simulated schedule failed to cover."""


class OracleBudgetError(BurnlabError):
    """Exact search exceeded its size or node-expansion budget."""
