"""Exception types shared across the package."""


class ToriclassError(Exception):
    """Base class for all library errors."""


class BadParams(ToriclassError, ValueError):
    pass


class DegeneratePolytope(ToriclassError):
    pass


class NotIDP(ToriclassError):
    pass


class LatticeDeficient(ToriclassError):
    pass


class TooLarge(ToriclassError):
    pass


class Disconnected(ToriclassError):
    pass


class EmptyGraph(ToriclassError):
    pass


class NotPerfect(ToriclassError):
    pass


class OddCycleConditionFails(ToriclassError):
    pass


class SearchBudgetExceeded(ToriclassError):
    """Raised when the equivalence search exhausts its node budget."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes
