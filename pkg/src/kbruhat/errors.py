"""Exception types shared across the engine."""


class DomainError(ValueError):
    """Input is well-formed but outside the operation's domain (e.g. u not <=_k w)."""


class InvariantError(RuntimeError):
    """A mathematical invariant the engine relies on was violated."""


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed a configured bound."""


class NonTerminationError(RuntimeError):
    """A rewriting loop ran past its iteration cap."""
