"""Exception types shared across the package.

Verdict-style results (Uncolorable, NoShortCircuit, NoColorableCut) are
sentinel return values, not exceptions; see the modules that produce them.
"""

from __future__ import annotations


class ParseError(ValueError):
    """Input text is not valid graph6, sparse6, or cubicmg."""


class NotCubic(ValueError):
    """Some vertex does not have degree exactly 3."""


class LoopEdge(ValueError):
    """A self-loop was encountered; loops are never allowed."""


class HasBridge(ValueError):
    """Operation requires a bridgeless graph."""


class NotDefined(ValueError):
    """Cyclic edge connectivity is not defined for this graph (n < 8)."""


class ImproperColoring(ValueError):
    """An edge coloring is not proper on the given graph."""


class NoPerfectMatching(ValueError):
    """The graph admits no perfect matching."""


class CapExceeded(RuntimeError):
    """An enumeration exceeded its configured cap."""


class OverlapViolation(RuntimeError):
    """Classified pattern occurrences overlap outside the known exception."""


class UnclassifiableP3b(RuntimeError):
    """A P3 occurrence without an admissible boundary pair matches neither
    known boundary configuration; the host violates the reduced-graph
    preconditions the classification relies on."""


class ConstructionFailed(RuntimeError):
    """A family generator could not satisfy its post-conditions."""


class InvalidFactor(ValueError):
    """An edge set is not a 2-factor of the given graph."""


class BridgeCreated(RuntimeError):
    """Internal invariant failure: a reduction step produced a bridge."""
