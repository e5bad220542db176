"""Shared exception type for precondition and invariant failures."""


class ContractViolation(ValueError):
    """An operation precondition or a structural invariant failed.

    ``constraint`` is a short machine-readable identifier for the violated
    invariant; the human-readable detail goes in the exception message.
    """

    def __init__(self, constraint: str, message: str):
        super().__init__(message)
        self.constraint = constraint
