"""Error hierarchy shared by the whole package.

Three classes, matching the three nonzero CLI exit codes:

* DocumentError          -- malformed or referentially broken input (exit 1)
* ValidationError        -- a mathematical invariant failed to hold (exit 2)
* UnsupportedOperationError -- a documented cap or restriction was hit (exit 3)
"""


class EngineError(Exception):
    """Common base so callers can catch everything from this package."""


class DocumentError(EngineError):
    """Input document is malformed: bad syntax, missing fields, or a
    reference to a vertex/element/edge that does not exist."""


class ValidationError(EngineError):
    """A mathematical invariant is violated: a cochain is not closed, a
    group table is not associative, a cocycle fails invariance, etc."""


class UnsupportedOperationError(EngineError):
    """The request is well formed but outside the engine's documented
    scope, e.g. torsion for rank >= 2 classes or an over-cap minor
    enumeration."""
