class ValidationError(ValueError):
    """Bad input: an invalid type, a non-dominant weight, a malformed coordinate list."""


class IncomparableError(ValidationError):
    """Two weights are not comparable in the order generated by a root subset."""


class InternalInconsistencyError(RuntimeError):
    """A mathematically guaranteed identity failed; this means a bug, not bad input."""
