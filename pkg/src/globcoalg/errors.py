"""Exception hierarchy shared by every module."""


class GlobcoalgError(Exception):
    pass


class StructuralError(GlobcoalgError, ValueError):
    """A cell, map or complex is malformed (unknown cell, wrong degree, ...)."""


class RingCapabilityError(GlobcoalgError, TypeError):
    """The operation needs a capability the active ring lacks (e.g. signs)."""


class ContractError(GlobcoalgError, ValueError):
    """An input violates an operation's precondition."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ComposabilityError(ContractError):
    pass


class BoundExceeded(GlobcoalgError, RuntimeError):
    """A closure computation hit one of its resource bounds."""

    def __init__(self, bound, limit):
        super().__init__(f"bound exceeded: {bound} > {limit}")
        self.bound = bound
        self.limit = limit
