"""Exception hierarchy.

Three broad classes, matching the three failure channels exposed by the CLI:
``DomainError`` (bad parameter region, cut violations, validity predicates),
``NumericalError`` (quadrature/series budget exhausted, divergence), and plain
``ValueError`` for malformed requests.
"""


class DomainError(ValueError):
    """Parameters outside the domain of the requested operation."""


class PoleError(DomainError):
    """Evaluation at a genuine pole (e.g. gamma at a nonpositive integer)."""


class DegenerateParameterError(DomainError):
    """Degenerate parameter combination with no terminating or limit path."""


class NumericalError(ArithmeticError):
    """A numerical method failed to reach its accuracy target or diverged."""


class ConvergenceError(NumericalError):
    """Series or quadrature failed to converge within budget."""
