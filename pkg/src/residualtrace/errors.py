"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input data violates an invariant of the operation it was passed to."""


class SchemaError(ValueError):
    """A JSON document does not match the expected schema.

    ``field`` names the offending key so callers can point at it.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class SingularSystemError(DomainError):
    """A square linear system is singular over the rational function field."""


class DegreeDetectionError(DomainError):
    """No fiber degree within the allowed bound fits a trace sequence."""


class ContinuationError(DomainError):
    """A sampled trace series admits no rational match within the degree bounds.

    ``index`` is the position of the offending trace in its batch.
    """

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index
