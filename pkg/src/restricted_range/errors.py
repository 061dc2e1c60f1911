class MalformedInputError(ValueError):
    """Bad instance file, bad element, or an endomorphism leaving B."""


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


class SizeLimitError(RuntimeError):
    def __init__(self, what, count, cap):
        super().__init__(f"{what}: {count} exceeds cap {cap}")
        self.count = count
        self.cap = cap


class VerificationError(AssertionError):
    """A closed-form characterisation disagreed with brute force."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
