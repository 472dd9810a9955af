"""Exception types raised by the toolkit.

Every error derives from :class:`LSystemError`; the CLI maps them to exit
code 2 and serializes :meth:`LSystemError.to_dict`.
"""

from __future__ import annotations

from typing import Any


class LSystemError(Exception):
    """Base class. ``details`` is merged into the machine-readable payload."""

    kind = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": str(self), **self.details}


class DomainError(LSystemError, ValueError):
    kind = "domain"


class NonDissipativeError(DomainError):
    kind = "non-dissipative"


class DegenerateError(DomainError):
    kind = "degenerate"


class InvariantError(DomainError):
    kind = "invariant"


class PoleError(LSystemError, ZeroDivisionError):
    """A transfer/impedance denominator vanished; ``denominator`` holds its value."""

    kind = "pole"

    def __init__(self, message: str, denominator: complex):
        super().__init__(message, denominator=[denominator.real, denominator.imag])
        self.denominator = denominator


class InfeasibleEntropyError(DomainError):
    """Requested c-entropy exceeds what the regime can attain."""

    kind = "infeasible-entropy"

    def __init__(self, message: str, s_max: float, **details: Any):
        super().__init__(message, s_max=s_max, **details)
        self.s_max = s_max


class InfiniteEntropyError(DomainError):
    """The requested data sits on the kappa = 0 boundary (h = -m(i))."""

    kind = "infinite-entropy"

    def __init__(self, message: str, construction: Any = None, **details: Any):
        super().__init__(message, **details)
        self.construction = construction


class ConvergenceError(LSystemError, RuntimeError):
    kind = "convergence"


class DivergenceError(ConvergenceError):
    kind = "divergence"
