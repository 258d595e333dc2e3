class ProjectiveError(Exception):
    pass


class ZeroTriple(ProjectiveError):
    pass


class NonCanonicalTriple(ProjectiveError):
    pass


class IdenticalPoints(ProjectiveError):
    pass


class IdenticalLines(ProjectiveError):
    pass
