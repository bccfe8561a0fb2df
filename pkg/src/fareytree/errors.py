"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class BreakpointError(DomainError):
    """A slope sits on a breakpoint where the ranking table is not injective."""


class NotInSetError(DomainError):
    """A pair or interval is not a member of the set it was claimed to be in."""


class GuardError(DomainError):
    """A configured size or resource limit would be exceeded."""
