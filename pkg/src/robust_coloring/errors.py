"""Exception types shared across the package."""


class RobustColoringError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RobustColoringError):
    """Malformed input: bad files, bad vertex indices, wrong graph family."""


class SizeMismatch(InputError):
    pass


class OverlapError(InputError):
    """G and H share an edge, so H is not a subgraph of the complement of G."""


class ParseError(InputError):
    pass


class PartialColoring(RobustColoringError):
    pass


class InfeasibleK(RobustColoringError):
    """No proper coloring of G exists with the requested number of colors."""


class Stuck(RobustColoringError):
    """Robust-greedy reached a vertex with no available color."""

    def __init__(self, vertex: int, position: int):
        super().__init__(f"no available color for vertex {vertex} (position {position} in the ordering)")
        self.vertex = vertex
        self.position = position


class BadTarget(RobustColoringError):
    pass


class SRangeError(RobustColoringError):
    pass


class DomainError(RobustColoringError):
    pass


class NotATree(InputError):
    pass


class NotSeriesParallel(InputError):
    pass


class NotEllTree(InputError):
    pass


class NotAPath(InputError):
    pass


class NotUnionOfPaths(InputError):
    pass
