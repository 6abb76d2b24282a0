class InvalidInput(ValueError):
    """Argument violates an operation's precondition."""


class ResourceLimit(RuntimeError):
    """Requested size exceeds a configured budget."""

    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what}={value} exceeds budget {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class ConsistencyError(RuntimeError):
    """Two independent counting engines disagreed."""


class FitFailure(ValueError):
    """No rational generating function within the degree bound fits the data."""
