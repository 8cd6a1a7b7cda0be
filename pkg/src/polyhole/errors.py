"""Exception types raised across the library."""


class PolyholeError(Exception):
    """Base class for all library errors."""


class EmptyInput(PolyholeError):
    """A polyomino needs at least one cell."""


class Disconnected(PolyholeError):
    """Cells do not form an edge-connected set."""

    def __init__(self, components):
        self.components = components
        sizes = sorted(len(c) for c in components)
        super().__init__(f"cells split into {len(components)} components (sizes {sizes})")


class ZeroArea(PolyholeError):
    """Perimeter bounds need a positive area."""


class BadDimensions(PolyholeError):
    """Grid dimensions outside the supported range."""


class BadBoundary(PolyholeError):
    """Arrangement boundary is not a valid ring template."""


class UndeterminedInterior(PolyholeError):
    """Operation needs a fully determined interior."""


class NotCompressible(PolyholeError):
    """Arrangement does not decompose as boundary + forced interior + free spaces."""

    def __init__(self, cell, reason):
        self.cell = cell
        self.reason = reason
        super().__init__(f"not compressible at {cell}: {reason}")


class NoStepFound(PolyholeError):
    """Dismantling search exhausted every candidate move."""

    def __init__(self, stats):
        self.stats = stats
        super().__init__(f"no dismantling move found ({stats})")


class NoRootedPlus(PolyholeError):
    """Hole insertion needs a plus rooted at the outer boundary."""


class UnsupportedResidue(PolyholeError):
    """No rearrangement template matches this side length."""


class UnsupportedAlpha(PolyholeError):
    """No construction exists for this threshold area."""


class CapExceeded(PolyholeError):
    """Enumeration size cap exceeded."""


class RaggedRows(PolyholeError):
    """Text grid rows have unequal lengths."""


class IllegalChar(PolyholeError):
    """Text grid contains a character outside the alphabet."""


class InternalInconsistency(PolyholeError):
    """Two supposedly equivalent checks disagreed; indicates a library bug."""
