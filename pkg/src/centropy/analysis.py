"""Aggregate reports and kappa curves, plus JSON-ready serialization."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .classify import (
    accretive_state_space_mu_range,
    classify_impedance,
    classify_operator,
    kappa_minimizer,
    kappa_sq_extremal,
    kappa_sq_sectorial,
)
from .errors import DomainError, LSystemError
from .lsystem import (
    LSystem,
    entropy_report,
    impedance,
    mu1_for_class_Mk,
    mu2_for_class_Mk_inv,
    quasi_kernel_xi,
    transfer,
)
from .entropy import is_krein_von_neumann
from .weyl import WeylModel, derived_constants

SIG_DIGITS = 15
NEAR_BAND = 1e-8


def fmt_real(x):
    """15 significant digits; infinities become the strings "inf" / "-inf"."""
    if x is None:
        return None
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(f"{x:.{SIG_DIGITS}g}")


def fmt_complex(z):
    if z is None:
        return None
    z = complex(z)
    return {"re": fmt_real(z.real), "im": fmt_real(z.imag)}


def to_jsonable(obj):
    """Recursively convert floats/complex/tuples to the report encoding."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return fmt_real(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return fmt_complex(obj)
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _try(fn, warnings: list, label: str):
    try:
        return fn()
    except LSystemError as exc:
        warnings.append(f"{label}: {exc}")
        return None


def analyze(model: WeylModel, h: complex, mu: float) -> dict:
    """Everything the toolkit knows about Theta(mu, h), as plain Python values."""
    sys = LSystem(model, mu, h)
    warnings: List[str] = []
    c = derived_constants(model)
    if c.E <= NEAR_BAND * (1 + abs(c.m)):
        warnings.append("Re m(i) is within 1e-8 of m(-0): kappa0 is (nearly) zero")
    if not sys.mu_is_inf and abs(sys.mu - sys.h.real) <= NEAR_BAND * (1 + abs(sys.mu)):
        warnings.append("mu is within 1e-8 of Re h: the quasi-kernel is (nearly) degenerate")
    unc = getattr(model, "m0_uncertainty", 0.0)
    if unc:
        warnings.append(f"m(-0) was extrapolated numerically; estimated uncertainty {unc:.2e}")

    rep = entropy_report(sys)
    op = classify_operator(model, sys.h)
    don = _try(lambda: classify_impedance(sys), warnings, "impedance class")
    xi = _try(lambda: quasi_kernel_xi(sys), warnings, "quasi-kernel")
    mu_range = None
    if op.accretive:
        mu_range = accretive_state_space_mu_range(model, sys.h).mu_min
    report = {
        "model": model.describe(),
        "constants": dict(zip("ABmCDE", c.as_tuple())),
        "m_at_i": model.m_at_i,
        "m_at_minus0": model.m_at_minus0,
        "h": sys.h,
        "mu": sys.mu,
        "kappa": rep.kappa,
        "entropy": rep.entropy,
        "dissipation": rep.dissipation,
        "operator_class": {"variant": op.variant, "beta": op.beta},
        "donoghue_class": None if don is None else {"variant": don.variant, "a": don.a, "kappa": don.kappa},
        "xi": xi,
        "krein_von_neumann": is_krein_von_neumann(model, sys.h, sys.mu),
        "V_at_i": _try(lambda: impedance(sys, 1j), warnings, "V(i)"),
        "W_at_i": _try(lambda: transfer(sys, 1j), warnings, "W(i)"),
        "W_at_minus_i": _try(lambda: transfer(sys, -1j), warnings, "W(-i)"),
        "mu1": _try(lambda: mu1_for_class_Mk(model, sys.h), warnings, "mu1"),
        "mu2": _try(lambda: mu2_for_class_Mk_inv(model, sys.h), warnings, "mu2"),
        "accretive_mu_min": mu_range,
        "warnings": warnings,
    }
    return report


@dataclass
class CurveData:
    beta: Optional[float]  # None for the extremal curve
    samples: List[Tuple[float, float]]
    h_star: float
    kappa_min: float
    sample_argmin: float
    bracket: Tuple[float, float]
    h_star_in_range: bool = field(default=True)

    def to_csv(self) -> str:
        lines = ["im_h,kappa"]
        lines += [f"{H:.{SIG_DIGITS}g},{k:.{SIG_DIGITS}g}" for H, k in self.samples]
        lines.append(
            f"# minimum h_star={self.h_star:.{SIG_DIGITS}g} kappa_min={self.kappa_min:.{SIG_DIGITS}g}"
            f" sample_argmin={self.sample_argmin:.{SIG_DIGITS}g}"
            f" bracket=[{self.bracket[0]:.{SIG_DIGITS}g};{self.bracket[1]:.{SIG_DIGITS}g}]"
            f" in_range={str(self.h_star_in_range).lower()}")
        return "\n".join(lines) + "\n"


def curve(model: WeylModel, h_min: float, h_max: float, n: int, beta: Optional[float] = None) -> CurveData:
    """Sample kappa(Im h) along the extremal line (beta None) or a beta-sectorial ray."""
    if not (0 < h_min < h_max and math.isfinite(h_max)):
        raise DomainError(f"need 0 < h_min < h_max, got [{h_min}, {h_max}]")
    if n < 3:
        raise DomainError(f"need at least 3 samples, got {n}")
    if beta is None:
        f = lambda H: kappa_sq_extremal(model, H)
    else:
        f = lambda H: kappa_sq_sectorial(model, beta, H)
    hs = np.linspace(h_min, h_max, n)
    ks = [math.sqrt(max(f(H), 0.0)) for H in hs]
    j = int(np.argmin(ks))
    bracket = (float(hs[max(j - 1, 0)]), float(hs[min(j + 1, n - 1)]))
    h_star = kappa_minimizer(model, beta)
    return CurveData(beta=beta, samples=[(float(H), k) for H, k in zip(hs, ks)], h_star=h_star,
                     kappa_min=math.sqrt(max(f(h_star), 0.0)), sample_argmin=float(hs[j]),
                     bracket=bracket, h_star_in_range=h_min <= h_star <= h_max)
