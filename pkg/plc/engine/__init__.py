class EngineError(Exception):
    pass


class InvalidStart(EngineError):
    def __init__(self, violations: list, hint: str = None):
        self.violations = violations
        message = "Invalid start configuration: " + "; ".join(v.detail for v in violations)
        super().__init__(message if hint is None else f"{message}. {hint}")


class ParallelLinesEncountered(EngineError):
    def __init__(self, l1, l2):
        self.pair = (l1, l2)
        super().__init__(f"Lines {l1.as_tuple()} and {l2.as_tuple()} are parallel")


class BudgetExceeded(EngineError):
    def __init__(self, kind: str, projected: int, limit: int):
        self.kind = kind
        self.projected = projected
        self.limit = limit
        super().__init__(f"{kind} budget exceeded: projected {projected}, limit {limit}")


class InconsistentConfiguration(EngineError):
    pass
