"""Exception hierarchy shared by all ordinal modules."""


class OrdinalError(Exception):
    """Base class for every error raised by this package."""


# --- poset construction and queries ---

class CycleDetected(OrdinalError):
    """The cover input contains a directed cycle, so it is not an order."""


class RedundantCover(OrdinalError):
    """A cover pair is already implied transitively by the other covers."""


class UnknownElement(OrdinalError):
    """An element id does not belong to the poset."""


class NoUniqueBound(OrdinalError):
    """A pair has zero or several minimal upper (maximal lower) bounds."""


class NotALattice(OrdinalError):
    """The operation requires a lattice and the poset is not one."""


class TooManyAtoms(OrdinalError):
    """Generator atom count exceeds its enumeration bound."""


# --- valuations ---

class NegativeAtomValue(OrdinalError):
    """Atom-derived valuations require non-negative atom weights."""


class ZeroMeasureContext(OrdinalError):
    """The bi-valuation is undefined for this (element, context) pair."""


class LatticeMismatch(OrdinalError):
    """Valuations passed to a product-rule audit live on incompatible lattices."""


# --- partitions and distributions ---

class GroundSetMismatch(OrdinalError):
    """Two partitions (or a partition and a distribution) disagree on atoms."""


# --- causal chains and intervals ---

class NotQuantifiable(OrdinalError):
    """No chain element within the declared index range includes the event."""


class NotSynchronized(OrdinalError):
    """The two chains do not project successive elements onto successive elements."""


class NonPositiveBoost(OrdinalError):
    """Boost factors must be positive rationals."""


class BoundExceeded(OrdinalError):
    """Fixture generator size is outside its supported range."""
