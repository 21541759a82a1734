"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is outside an operation's domain (bad code, state, expansion, config)."""


class DivergenceError(RuntimeError):
    """A dialogue simulation exceeded its turn cap without an announcement."""
