"""Closed-form solutions of the two dual c-entropy problems.

Problem 1: given c-entropy S, minimize the dissipation coefficient Im h.
Problem 2: given the dissipation coefficient, maximize the c-entropy.

Each is solved under one of four constraints: impedance in M_kappa,
impedance in M_kappa^-1, extremal T_h, or beta-sectorial T_h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional

from .classify import (
    CLASS_MK,
    CLASS_MK_INV,
    EXTREMAL,
    SECTORIAL,
    _check_beta,
    classify_impedance,
    classify_operator,
    kappa0_extremal,
    kappa0_sectorial,
)
from .config import INFINITE_ENTROPY_BAND, ROOT_MERGE_BAND, check_tolerance
from .errors import DomainError, InfeasibleEntropyError, InfiniteEntropyError
from .lsystem import INF, LSystem, entropy_from_kappa, entropy_report, is_inf, mu1_for_class_Mk
from .weyl import WeylModel, derived_constants

REGIME_MK = "class_Mk"
REGIME_MK_INV = "class_Mk_inv"
REGIME_EXTREMAL = "extremal"
REGIME_SECTORIAL = "sectorial"
REGIME_ACCRETIVE = "accretive"


@dataclass(frozen=True)
class DualProblemSolution:
    """Optimal parameters. ``any_mu`` means every mu works; ``mu`` is then the witness inf."""

    h: complex
    mu: float
    any_mu: bool
    entropy: float
    dissipation: float
    regime: str
    unique: bool
    beta: Optional[float] = None
    # second root of the quadratic for problem 1 (maximal dissipation at that S)
    larger_root: Optional[float] = None
    companions: Dict[str, float] = field(default_factory=dict)
    model: Optional[WeylModel] = field(default=None, repr=False, compare=False)

    def system(self, mu: Optional[float] = None) -> LSystem:
        return LSystem(self.model, self.mu if mu is None else mu, self.h)


def _check_entropy(S: float) -> float:
    S = float(S)
    if not (S > 0 and math.isfinite(S)):
        raise DomainError(f"entropy S must be positive and finite, got {S}")
    return S


def _check_dissipation(D: float) -> float:
    D = float(D)
    if not (D > 0 and math.isfinite(D)):
        raise DomainError(f"dissipation must be positive and finite, got {D}")
    return D


def _coth(x: float) -> float:
    return 1.0 / math.tanh(x)


def infinite_entropy_solution(model: WeylModel) -> DualProblemSolution:
    """h = -m(i): kappa = 0 and the impedance lies in class M for every mu."""
    h = -model.m_at_i
    return DualProblemSolution(h=h, mu=INF, any_mu=True, entropy=INF, dissipation=h.imag,
                               regime="class_M", unique=False, model=model)


# --- Donoghue regimes --------------------------------------------------------


def _donoghue_min_dissipation(model, S, mu_fn, regime):
    S = _check_entropy(S)
    c = derived_constants(model)
    d_min = c.B * math.tanh(S / 2)
    h = complex(-c.A, d_min)
    return DualProblemSolution(h=h, mu=mu_fn(c), any_mu=False, entropy=S, dissipation=d_min,
                               regime=regime, unique=True, model=model)


def min_dissipation_Mk_inv(model: WeylModel, S: float) -> DualProblemSolution:
    """Im h = B tanh(S/2), h = -A + i Im h, mu = -A."""
    return _donoghue_min_dissipation(model, S, lambda c: -c.A, REGIME_MK_INV)


def min_dissipation_Mk(model: WeylModel, S: float) -> DualProblemSolution:
    """Same h as the M_kappa^-1 case with mu = inf."""
    return _donoghue_min_dissipation(model, S, lambda c: INF, REGIME_MK)


def donoghue_s_max(B: float, D: float) -> float:
    """ln|D + B| - ln|D - B|; infinite at D = B."""
    if D == B:
        return INF
    return math.log(abs(D + B)) - math.log(abs(D - B))


def _donoghue_max_entropy(model, D, regime, band):
    D = _check_dissipation(D)
    c = derived_constants(model)
    band = INFINITE_ENTROPY_BAND if band is None else band
    if abs(D - c.B) <= band * (1 + c.B):
        raise InfiniteEntropyError(
            f"dissipation {D} equals -Im m(i) = {c.B}: entropy is unbounded, attained at h = -m(i)",
            construction=infinite_entropy_solution(model), B=c.B)
    above = D > c.B
    # M_kappa takes mu = -A above B and inf below; M_kappa^-1 the reverse
    finite = above if regime == REGIME_MK else not above
    return DualProblemSolution(h=complex(-c.A, D), mu=-c.A if finite else INF, any_mu=False,
                               entropy=donoghue_s_max(c.B, D), dissipation=D, regime=regime,
                               unique=True, model=model)


def max_entropy_Mk(model: WeylModel, D: float, band: Optional[float] = None) -> DualProblemSolution:
    """h = -A + iD with S = ln|D+B| - ln|D-B|; ``band`` widens the D = B boundary test."""
    return _donoghue_max_entropy(model, D, REGIME_MK, band)


def max_entropy_Mk_inv(model: WeylModel, D: float, band: Optional[float] = None) -> DualProblemSolution:
    return _donoghue_max_entropy(model, D, REGIME_MK_INV, band)


# --- extremal and sectorial regimes -------------------------------------------


def _smaller_root(half_sum: float, product: float, disc: float, s_max: float, S: float, regime: str):
    """Roots of x^2 - 2 half_sum x + product with disc = half_sum^2 - product."""
    scale = half_sum * half_sum
    if disc < -ROOT_MERGE_BAND * scale:
        raise InfeasibleEntropyError(
            f"entropy S = {S} exceeds the {regime} maximum {s_max}", s_max=s_max, regime=regime)
    if disc <= ROOT_MERGE_BAND * scale:
        disc = 0.0
    big = half_sum + math.sqrt(disc)
    if big <= 0:
        raise InfeasibleEntropyError(f"entropy S = {S} is not attainable in the {regime} regime",
                                     s_max=s_max, regime=regime)
    return product / big, big


def min_dissipation_extremal(model: WeylModel, S: float) -> DualProblemSolution:
    """Im h = B coth S - sqrt(B^2 coth^2 S - D), h = -m + i Im h, any mu."""
    S = _check_entropy(S)
    c = derived_constants(model)
    s_max = entropy_from_kappa(kappa0_extremal(model))
    half = c.B * _coth(S)
    small, big = _smaller_root(half, c.D, half * half - c.D, s_max, S, REGIME_EXTREMAL)
    return DualProblemSolution(h=complex(-c.m, small), mu=INF, any_mu=True, entropy=S,
                               dissipation=small, regime=REGIME_EXTREMAL, unique=False,
                               beta=math.pi / 2, larger_root=big, model=model)


def max_entropy_extremal(model: WeylModel) -> DualProblemSolution:
    """h = -m + i sqrt(D), S = -ln kappa0; infinite entropy (h = -m(i)) when A = m."""
    c = derived_constants(model)
    k0 = kappa0_extremal(model)
    if k0 == 0:
        sol = infinite_entropy_solution(model)
        return DualProblemSolution(h=sol.h, mu=INF, any_mu=True, entropy=INF, dissipation=sol.h.imag,
                                   regime=REGIME_EXTREMAL, unique=False, beta=math.pi / 2, model=model)
    root = math.sqrt(c.D)
    return DualProblemSolution(h=complex(-c.m, root), mu=INF, any_mu=True, entropy=-math.log(k0),
                               dissipation=root, regime=REGIME_EXTREMAL, unique=False,
                               beta=math.pi / 2, model=model)


def min_dissipation_sectorial(model: WeylModel, beta: float, S: float) -> DualProblemSolution:
    """Im h = sin^2(b)[B coth S - E cot b - sqrt((E cot b - B coth S)^2 - D csc^2 b)]."""
    beta = _check_beta(beta)
    S = _check_entropy(S)
    c = derived_constants(model)
    s_max = -math.log(kappa0_sectorial(model, beta))
    s2 = math.sin(beta) ** 2
    cot = 1 / math.tan(beta)
    t = c.B * _coth(S) - c.E * cot
    # quadratic in H = Im h: H^2 - 2 s2 t H + s2 D = 0
    small, big = _smaller_root(s2 * t, s2 * c.D, s2 * s2 * (t * t - c.D / s2), s_max, S, REGIME_SECTORIAL)
    h = complex(cot * small - c.m, small)
    return DualProblemSolution(h=h, mu=INF, any_mu=True, entropy=S, dissipation=small,
                               regime=REGIME_SECTORIAL, unique=False, beta=beta, larger_root=big,
                               model=model)


def max_entropy_sectorial(model: WeylModel, beta: float) -> DualProblemSolution:
    """h = cos(b) sqrt(D) - m + i sin(b) sqrt(D), S = -ln kappa0(b)."""
    beta = _check_beta(beta)
    c = derived_constants(model)
    root = math.sqrt(c.D)
    h = complex(math.cos(beta) * root - c.m, math.sin(beta) * root)
    return DualProblemSolution(h=h, mu=INF, any_mu=True, entropy=-math.log(kappa0_sectorial(model, beta)),
                               dissipation=h.imag, regime=REGIME_SECTORIAL, unique=False, beta=beta,
                               model=model)


# --- accretive synthesis -------------------------------------------------------


def mu1_from_constants(model: WeylModel) -> float:
    """mu1 for the maximal-entropy extremal h written through A, B, m, C, D only."""
    c = derived_constants(model)
    A, B, m, D = c.A, c.B, c.m, c.D
    F = (math.sqrt(D) - math.sqrt(c.C)) / (B * math.sqrt(D))
    num = (A - m * B * F) * (B * F - 1) + (m * m * F + D * F - B - m * A * F) * (A - m) * F
    den = (B * F - 1) ** 2 + (A - m) ** 2 * F * F
    return num / den


def mu2_from_mu1(model: WeylModel, mu1: float) -> float:
    """-(mu1 m + m^2 + D)/(mu1 + m), with the limit inf at mu1 = -m."""
    c = derived_constants(model)
    if is_inf(mu1):
        return -c.m
    if mu1 + c.m == 0:
        return INF
    return -(mu1 * c.m + c.m * c.m + c.D) / (mu1 + c.m)


def max_entropy_accretive(model: WeylModel) -> DualProblemSolution:
    """Best over all accretive T_h: the extremal answer, plus the mu placing V in M_kappa0 / M_kappa0^-1."""
    sol = max_entropy_extremal(model)
    if math.isinf(sol.entropy):
        return DualProblemSolution(**{**sol.__dict__, "regime": REGIME_ACCRETIVE})
    mu1 = mu1_from_constants(model)
    companions = {"mu1": mu1, "mu2": mu2_from_mu1(model, mu1), "mu1_rotation": mu1_for_class_Mk(model, sol.h)}
    return DualProblemSolution(h=sol.h, mu=sol.mu, any_mu=True, entropy=sol.entropy,
                               dissipation=sol.dissipation, regime=REGIME_ACCRETIVE, unique=False,
                               beta=sol.beta, companions=companions, model=model)


# --- checks -------------------------------------------------------------------


def is_krein_von_neumann(model: WeylModel, h: complex, mu: float, tol: Optional[float] = None) -> bool:
    """True iff mu = inf and the quasi-kernel value Re h equals -m(-0)."""
    tol = check_tolerance() if tol is None else tol
    if not is_inf(mu):
        return False
    m = model.m_at_minus0
    return abs(complex(h).real + m) <= tol * (1 + abs(m))


def krein_von_neumann_check(sol: DualProblemSolution, mu: float, tol: Optional[float] = None) -> bool:
    return is_krein_von_neumann(sol.model, sol.h, mu, tol)


def _witness_mus(sol: DualProblemSolution):
    if not sol.any_mu:
        return [sol.mu]
    return [mu for mu in (0.0, 1.0, -1.0, INF) if mu != sol.h.real]


def verify_solution(sol: DualProblemSolution, tol: Optional[float] = None) -> dict:
    """Recompute entropy, dissipation and classes for the returned system(s).

    Returns the worst residuals plus boolean verdicts; ``ok`` combines them.
    """
    tol = check_tolerance() if tol is None else tol
    model = sol.model
    ent_res, dis_res = 0.0, 0.0
    for mu in _witness_mus(sol):
        rep = entropy_report(LSystem(model, mu, sol.h))
        if math.isinf(sol.entropy) or math.isinf(rep.entropy):
            ent_res = max(ent_res, 0.0 if rep.entropy == sol.entropy else INF)
        else:
            ent_res = max(ent_res, abs(rep.entropy - sol.entropy))
        dis_res = max(dis_res, abs(rep.dissipation - sol.dissipation))
    out = {"entropy_residual": ent_res, "dissipation_residual": dis_res}
    regime_ok = True
    if sol.regime in (REGIME_MK, REGIME_MK_INV):
        cls = classify_impedance(LSystem(model, sol.mu, sol.h), tol)
        want = CLASS_MK if sol.regime == REGIME_MK else CLASS_MK_INV
        regime_ok = cls.variant == want and abs(cls.kappa - math.exp(-sol.entropy)) <= tol
        out["donoghue_class"] = cls.variant
    elif sol.regime in (REGIME_EXTREMAL, REGIME_ACCRETIVE):
        regime_ok = classify_operator(model, sol.h).variant == EXTREMAL
    elif sol.regime == REGIME_SECTORIAL:
        cls = classify_operator(model, sol.h)
        regime_ok = cls.variant == SECTORIAL and abs(cls.beta - sol.beta) <= tol
        out["beta_residual"] = abs(cls.beta - sol.beta) if cls.beta is not None else INF
    out["regime_ok"] = regime_ok
    out["ok"] = regime_ok and ent_res <= tol and dis_res <= tol
    return out
