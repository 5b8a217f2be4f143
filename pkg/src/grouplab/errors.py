"""Exception hierarchy shared by all grouplab modules."""


class GroupLabError(Exception):
    """Base class for all grouplab errors."""


class DegreeMismatchError(GroupLabError):
    """Permutations of different degrees were combined."""


class NotASubgroupError(GroupLabError):
    """An argument was required to be a subgroup of the ambient group."""


class NotNormalError(GroupLabError):
    """An argument was required to be a normal subgroup."""


class BoundExceededError(GroupLabError):
    """A desk-scale bound (degree or order) was exceeded."""


class InvalidActionError(GroupLabError):
    """A semidirect-product action is not a faithful automorphism action."""


class CycleParseError(GroupLabError):
    """Malformed cycle notation."""


class CatalogError(GroupLabError):
    """Malformed catalog file or failed ingestion-time validation."""


class CacheError(GroupLabError):
    """Lattice cache file is corrupt or has an unexpected version."""
