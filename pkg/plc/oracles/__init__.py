class DegenerateGrid(Exception):
    pass


class IncidenceBoundViolation(AssertionError):
    def __init__(self, violations: list):
        self.violations = violations
        super().__init__("Incidence bound violated by sample(s): " + "; ".join(str(v) for v in violations))
