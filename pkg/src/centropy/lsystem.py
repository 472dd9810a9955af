"""L-systems Theta(mu, h) described by their parameters.

``mu`` is a float with ``math.inf`` standing for the point at infinity; every
mu-dependent formula has an explicit limit branch for it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import REALNESS_BAND
from .errors import DegenerateError, DomainError, InvariantError, NonDissipativeError, PoleError
from .weyl import WeylModel

INF = math.inf


def is_inf(mu: float) -> bool:
    return mu == INF or mu == -INF


def _check_h(h: complex) -> complex:
    h = complex(h)
    if not (math.isfinite(h.real) and math.isfinite(h.imag)):
        raise DomainError(f"h must be finite, got {h}")
    if not h.imag > 0:
        raise NonDissipativeError(f"non-dissipative: Im h must be positive, got {h.imag}")
    return h


def _check_mu(mu) -> float:
    mu = float(mu)
    if math.isnan(mu):
        raise DomainError("mu is NaN")
    return INF if is_inf(mu) else mu


@dataclass(frozen=True)
class LSystem:
    """Parameters (mu, h) of an L-system bound to a Weyl model.

    ``mu == Re h`` is accepted: the optimal systems for the Donoghue regimes
    sit exactly there. Only the quasi-kernel value is undefined at that point.
    """

    model: WeylModel
    mu: float
    h: complex

    def __post_init__(self):
        object.__setattr__(self, "h", _check_h(self.h))
        object.__setattr__(self, "mu", _check_mu(self.mu))

    @property
    def mu_is_inf(self) -> bool:
        return self.mu == INF

    def transfer(self, z: complex) -> complex:
        return transfer(self, z)

    def impedance(self, z: complex) -> complex:
        return impedance(self, z)


def transfer(sys: LSystem, z: complex) -> complex:
    """W(z) = (mu - h)/(mu - conj h) * (m(z) + conj h)/(m(z) + h)."""
    M = sys.model.eval_m(z)
    h = sys.h
    den = M + h
    if den == 0:
        raise PoleError(f"transfer function has a pole at z={z}: m(z) + h = 0", den)
    w = (M + h.conjugate()) / den
    if not sys.mu_is_inf:
        w *= (sys.mu - h) / (sys.mu - h.conjugate())
    return w


def impedance(sys: LSystem, z: complex) -> complex:
    """V(z) = (m(z) + mu) Im h / ((mu - Re h) m(z) + mu Re h - |h|^2)."""
    M = sys.model.eval_m(z)
    h = sys.h
    if sys.mu_is_inf:
        num, den = complex(h.imag), M + h.real
    else:
        mu = sys.mu
        num = (M + mu) * h.imag
        den = (mu - h.real) * M + mu * h.real - abs(h) ** 2
    if den == 0:
        raise PoleError(f"impedance function has a pole at z={z}", complex(den))
    return num / den


def kappa_of(model: WeylModel, h: complex) -> float:
    """|(m(i) + h)/(m(i) + conj h)|; the denominator never vanishes for Im h > 0."""
    h = _check_h(h)
    M = model.m_at_i
    return abs((M + h) / (M + h.conjugate()))


def von_neumann_kappa(sys: LSystem) -> float:
    return kappa_of(sys.model, sys.h)


@dataclass(frozen=True)
class EntropyReport:
    kappa: float
    entropy: float
    dissipation: float


def entropy_from_kappa(kappa: float) -> float:
    return INF if kappa == 0 else -math.log(kappa)


def entropy_report(sys: LSystem) -> EntropyReport:
    k = von_neumann_kappa(sys)
    return EntropyReport(kappa=k, entropy=entropy_from_kappa(k), dissipation=sys.h.imag)


def dual_mu(mu: float, h: complex) -> float:
    """mu -> (mu Re h - |h|^2)/(mu - Re h), extended to the point at infinity."""
    x = h.real
    if is_inf(mu):
        return x
    if mu == x:
        return INF
    return (mu * x - abs(h) ** 2) / (mu - x)


def quasi_kernel_xi(sys: LSystem) -> float:
    """Boundary value xi of the quasi-kernel: y'(l) = xi y(l)."""
    if sys.mu_is_inf:
        return sys.h.real
    if sys.mu == sys.h.real:
        raise DegenerateError("quasi-kernel value is undefined at mu = Re h", mu=sys.mu)
    return dual_mu(sys.mu, sys.h)


# --- distinguished values mu1, mu2 -----------------------------------------

# below this |alpha| the rotation is treated as trivial and mu1 is infinite
_ALPHA_ZERO = 1e-13


def _alpha(model: WeylModel, h: complex) -> float:
    M = model.m_at_i
    num = M + h
    if num == 0:
        raise DegenerateError("alpha is undefined for h = -m(i) (kappa = 0)")
    return cmath.phase(num / (M + h.conjugate()))


def _real_part_checked(value: complex, den: complex, what: str) -> float:
    # conditioning grows like 1/|den|, so the band does too
    band = REALNESS_BAND * (1 + abs(value)) / min(1.0, abs(den))
    if abs(value.imag) > band:
        raise InvariantError(f"{what} has imaginary residue {value.imag:.3e}", value=[value.real, value.imag])
    return value.real


def mu1_for_class_Mk(model: WeylModel, h: complex) -> float:
    """mu1 = (e^{ia} conj h - h)/(e^{ia} - 1), a = Arg((m(i)+h)/(m(i)+conj h)).

    Returns ``inf`` when a = 0, where the formula has that limit.
    """
    h = _check_h(h)
    a = _alpha(model, h)
    if abs(a) < _ALPHA_ZERO:
        return INF
    e = cmath.exp(1j * a)
    den = e - 1
    return _real_part_checked((e * h.conjugate() - h) / den, den, "mu1")


def mu2_for_class_Mk_inv(model: WeylModel, h: complex) -> float:
    """mu2 = (e^{ia} conj h + h)/(e^{ia} + 1); ``inf`` when a = pi."""
    h = _check_h(h)
    a = _alpha(model, h)
    if abs(abs(a) - math.pi) < _ALPHA_ZERO:
        return INF
    e = cmath.exp(1j * a)
    den = e + 1
    return _real_part_checked((e * h.conjugate() + h) / den, den, "mu2")
