"""Accretivity classification of T_h, kappa lower bounds, inverse maps kappa -> h,
and Donoghue-class detection for impedance functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

from .config import EXTREMAL_BAND, KAPPA_MERGE_BAND, ROOT_MERGE_BAND, check_tolerance
from .errors import DomainError, NonDissipativeError
from .lsystem import INF, LSystem, impedance, is_inf
from .weyl import WeylModel, derived_constants

NON_ACCRETIVE = "non_accretive"
SECTORIAL = "sectorial"
EXTREMAL = "extremal_accretive"
SELF_ADJOINT = "self_adjoint_boundary"


@dataclass(frozen=True)
class OperatorClass:
    variant: str
    beta: Optional[float] = None
    margin: float = 0.0  # Re h + m(-0)

    @property
    def accretive(self) -> bool:
        return self.variant in (SECTORIAL, EXTREMAL)


def classify_operator(model: WeylModel, h: complex, band: float = EXTREMAL_BAND) -> OperatorClass:
    h = complex(h)
    if h.imag < 0:
        raise NonDissipativeError(f"non-dissipative: Im h must be positive, got {h.imag}")
    m = model.m_at_minus0
    s = h.real + m
    if h.imag == 0:
        return OperatorClass(SELF_ADJOINT, margin=s)
    if abs(s) <= band * (1 + abs(m)):
        return OperatorClass(EXTREMAL, beta=math.pi / 2, margin=s)
    if s < 0:
        return OperatorClass(NON_ACCRETIVE, margin=s)
    return OperatorClass(SECTORIAL, beta=math.atan2(h.imag, s), margin=s)


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not 0 < beta < math.pi / 2:
        raise DomainError(f"beta must lie in (0, pi/2), got {beta}")
    return beta


# --- lower bounds for kappa --------------------------------------------------


def kappa0_extremal(model: WeylModel) -> float:
    """Smallest kappa over extremal T_h; zero exactly when Re m(i) = m(-0).

    Uses kappa0 = E/(sqrt(D) + B), an algebraic rewrite of
    sqrt((sqrt(D) - B)/(sqrt(D) + B)) free of cancellation.
    """
    c = derived_constants(model)
    if c.E == 0:
        return 0.0
    return c.E / (math.sqrt(c.D) + c.B)


def kappa0_sectorial(model: WeylModel, beta: float) -> float:
    beta = _check_beta(beta)
    c = derived_constants(model)
    r = math.sqrt(c.D) + c.E * math.cos(beta)
    s = c.B * math.sin(beta)
    return math.sqrt(max(r - s, 0.0) / (r + s))


def kappa_sq_extremal(model: WeylModel, H: float) -> float:
    """kappa^2 of h = -m + iH as a function of H = Im h > 0."""
    c = derived_constants(model)
    return (H * H - 2 * c.B * H + c.D) / (H * H + 2 * c.B * H + c.D)


def kappa_sq_sectorial(model: WeylModel, beta: float, H: float) -> float:
    """kappa^2 of h = -m + H cot(beta) + iH."""
    beta = _check_beta(beta)
    c = derived_constants(model)
    s2 = math.sin(beta) ** 2
    cot = 1 / math.tan(beta)
    lin = c.E * cot
    return (H * H + 2 * s2 * (lin - c.B) * H + c.D * s2) / (H * H + 2 * s2 * (lin + c.B) * H + c.D * s2)


def kappa_minimizer(model: WeylModel, beta: Optional[float] = None) -> float:
    """Im h where the kappa curve bottoms out: sqrt(D), times sin(beta) if sectorial."""
    D = derived_constants(model).D
    if beta is None:
        return math.sqrt(D)
    return math.sin(_check_beta(beta)) * math.sqrt(D)


# --- inverse constructions ---------------------------------------------------


def _check_kappa(kappa: float) -> float:
    kappa = float(kappa)
    if not 0 <= kappa < 1:
        raise DomainError(f"kappa must lie in [0, 1), got {kappa}")
    return kappa


def _quadratic_pair(half_sum: float, product: float, disc: float, scale: float) -> List[float]:
    """Positive roots of H^2 - 2 half_sum H + product = 0 with disc = half_sum^2 - product."""
    if abs(disc) <= ROOT_MERGE_BAND * scale:
        return [half_sum]
    r = math.sqrt(disc)
    big = half_sum + r
    return [product / big, big]


def extremal_h_from_kappa(model: WeylModel, kappa: float) -> List[complex]:
    """All extremal h with the given kappa (one at kappa0, otherwise two, smaller Im h first)."""
    kappa = _check_kappa(kappa)
    c = derived_constants(model)
    xi = (1 + kappa * kappa) / (1 - kappa * kappa)
    half = c.B * xi
    disc = half * half - c.D
    if disc < -ROOT_MERGE_BAND * half * half:
        k0 = kappa0_extremal(model)
        if kappa < k0 * (1 - KAPPA_MERGE_BAND):
            raise DomainError(f"kappa = {kappa} is below the extremal bound {k0}", kappa0=k0)
        disc = 0.0
    return [complex(-c.m, H) for H in _quadratic_pair(half, c.D, disc, half * half)]


def sectorial_h_from_kappa(model: WeylModel, beta: float, kappa: float) -> List[complex]:
    """All beta-sectorial h with the given kappa (smaller Im h first)."""
    beta = _check_beta(beta)
    kappa = _check_kappa(kappa)
    c = derived_constants(model)
    xi = (1 + kappa * kappa) / (1 - kappa * kappa)
    s2 = math.sin(beta) ** 2
    cot = 1 / math.tan(beta)
    t = xi * c.B - c.E * cot
    e_prime = t * t - c.D / s2
    if e_prime < -ROOT_MERGE_BAND * t * t or t <= 0:
        k0 = kappa0_sectorial(model, beta)
        if t <= 0 or kappa < k0 * (1 - KAPPA_MERGE_BAND):
            raise DomainError(f"kappa = {kappa} is below the sectorial bound {k0} for beta = {beta}", kappa0=k0)
        # kappa sits on the bound; rounding in xi pushed the discriminant negative
        e_prime = 0.0
    # roots in H = Im h: H^2 - 2 s2 t H + s2 D = 0
    roots = _quadratic_pair(s2 * t, s2 * c.D, s2 * s2 * e_prime, s2 * s2 * t * t)
    return [complex(-c.m + H * cot, H) for H in roots]


# --- Donoghue classes --------------------------------------------------------

CLASS_M = "M"
CLASS_MK = "M_kappa"
CLASS_MK_INV = "M_kappa_inv"
CLASS_NONE = "none"


@dataclass(frozen=True)
class DonoghueClass:
    variant: str
    a: float
    kappa: Optional[float] = None
    re_v: float = 0.0
    # |h predicted by the h-criterion for (mu, a) - actual h|; None if variant is none
    criterion_residual: Optional[float] = None


def kappa_from_a(a: float) -> float:
    """(1-a)/(1+a) for a < 1, (a-1)/(1+a) for a > 1, 0 at a = 1."""
    return abs(1 - a) / (1 + a)


def a_for_class(kappa: float, inverse: bool) -> float:
    """Normalization Im V(i) of M_kappa ((1-k)/(1+k)) or M_kappa^-1 ((1+k)/(1-k))."""
    return (1 + kappa) / (1 - kappa) if inverse else (1 - kappa) / (1 + kappa)


def donoghue_h(model: WeylModel, mu: float, a: float) -> complex:
    """The unique h with V(i) = a i for the given mu.

    With c + i d = m(i): h = -c - (i/a) d at mu = -c, the rational formula in mu
    for other finite mu, and h = -c - i a d at mu = inf.
    """
    if not a > 0:
        raise DomainError(f"normalization a must be positive, got {a}")
    M = model.m_at_i
    c, d = M.real, M.imag
    if is_inf(mu):
        return complex(-c, -a * d)
    if mu == -c:
        return complex(-c, -d / a)
    s = c + mu
    den = a * a * d * d + s * s
    x = (a * a * d * d * mu - d * d * s - c * s * s) / den
    y = -(a * d**3 + a * d * s * s) / den
    return complex(x, y)


def classify_impedance(sys: LSystem, tol: Optional[float] = None) -> DonoghueClass:
    tol = check_tolerance() if tol is None else tol
    V = impedance(sys, 1j)
    a = V.imag
    if abs(V.real) > tol * (1 + abs(V)) or a <= 0:
        return DonoghueClass(CLASS_NONE, a=a, re_v=V.real)
    residual = abs(donoghue_h(sys.model, sys.mu, a) - sys.h)
    if abs(a - 1) <= tol:
        return DonoghueClass(CLASS_M, a=a, kappa=0.0, re_v=V.real, criterion_residual=residual)
    variant = CLASS_MK if a < 1 else CLASS_MK_INV
    return DonoghueClass(variant, a=a, kappa=kappa_from_a(a), re_v=V.real, criterion_residual=residual)


# --- accretive (*)-extensions ------------------------------------------------


@dataclass(frozen=True)
class MuRange:
    mu_min: float
    note: str


def accretive_state_space_mu_range(model: WeylModel, h: complex) -> MuRange:
    """Smallest mu giving an accretive state-space operator: (Im h)^2/(m + Re h) + Re h.

    For extremal T_h only mu = inf qualifies, reported as ``mu_min = inf``.
    """
    cls = classify_operator(model, h)
    if cls.variant == EXTREMAL:
        return MuRange(INF, "extremal main operator: mu = inf is the only accretive choice")
    if cls.variant != SECTORIAL:
        raise DomainError(f"main operator is {cls.variant}, not accretive")
    h = complex(h)
    mu_min = h.imag**2 / cls.margin + h.real
    return MuRange(mu_min, "mu >= mu_min accretive; extremal at mu_min; same-angle sectorial at mu = inf")
