class TheoremViolation(Exception):
    def __init__(self, name: str, stage: int, detail: str):
        self.name = name
        self.stage = stage
        self.detail = detail
        super().__init__(f"{name} fails at stage {stage}: {detail}")
