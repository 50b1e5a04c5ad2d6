class CapExceededError(ValueError):
    """Raised when an instance or parameter choice exceeds a configured cap."""

    def __init__(self, cap: str, limit: int, value: int, env_var: str = None):
        self.cap = cap
        self.limit = limit
        self.value = value
        self.env_var = env_var
        message = f"{cap} cap exceeded: {value} > {limit}"
        if env_var:
            message += f" (raise it with {env_var})"
        super().__init__(message)


class ResampleBudgetError(RuntimeError):
    """Raised when the randomized ordinal solver runs out of resamples."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"resample budget of {budget} draws exhausted without a valid selection")


class ParseError(ValueError):
    """Instance file could not be parsed; names the offending line and/or field."""

    def __init__(self, message: str, field: str = None, line: int = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class KindMismatchError(ValueError):
    """An algorithm was applied to an instance kind it does not accept."""

    def __init__(self, algorithm: str, kind: str, accepted: tuple):
        self.algorithm = algorithm
        self.kind = kind
        self.accepted = accepted
        super().__init__(
            f"algorithm '{algorithm}' accepts {', '.join(accepted)} instances, got '{kind}'"
        )


class InvalidInstanceError(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"instance failed validation: {report.summary()}")
