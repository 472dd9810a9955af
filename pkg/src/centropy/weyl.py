"""Weyl function models m(z) for half-line Schroedinger operators.

Sign convention: Im m(z) < 0 whenever Im z > 0, and m(z) = -psi'(l)/psi(l)
for the solution psi that is square integrable at infinity.

Two closed forms are provided (q = 0 and q = 2/x^2, i.e. Bessel orders 1/2 and
3/2), a numerical model for an arbitrary real potential, and thin wrappers that
let callers supply m directly (a callable, or just the two constants m(i) and
m(-0) that every downstream formula depends on).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import BarycentricInterpolator

from .errors import ConvergenceError, DivergenceError, DomainError, InvariantError


def sqrt_decay(w: complex) -> complex:
    """Square root on the branch with Im >= 0 (principal branch for Im w >= 0)."""
    r = cmath.sqrt(complex(w))
    if r.imag < 0:
        r = -r
    return r


# ---------------------------------------------------------------------------
# potentials


@dataclass(frozen=True, eq=False)
class Potential:
    """Real potential q on [ell, inf).

    ``kind`` is ``"bessel"`` (q = (nu^2 - 1/4)/x^2) or ``"tabulated"``
    (piecewise linear through the samples, constant beyond the last one).
    """

    kind: str
    ell: float = 1.0
    nu: Optional[float] = None
    x: Optional[np.ndarray] = None
    q: Optional[np.ndarray] = None

    @classmethod
    def bessel(cls, nu: float, ell: float = 1.0) -> "Potential":
        if nu < 0.5:
            raise DomainError(f"Bessel order must be >= 1/2, got {nu}")
        if not ell > 0:
            raise DomainError(f"Bessel potential needs ell > 0, got {ell}")
        return cls("bessel", float(ell), nu=float(nu))

    @classmethod
    def tabulated(cls, x, q) -> "Potential":
        x = np.asarray(x, dtype=float)
        q = np.asarray(q, dtype=float)
        if x.ndim != 1 or x.shape != q.shape or x.size < 1:
            raise DomainError("potential table needs matching 1-D x and q columns")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(q))):
            raise DomainError("potential table contains non-finite entries")
        if np.any(np.diff(x) <= 0):
            raise DomainError("potential grid must be strictly increasing in x")
        x.setflags(write=False)
        q.setflags(write=False)
        return cls("tabulated", float(x[0]), x=x, q=q)

    @classmethod
    def load(cls, path, ell: Optional[float] = None) -> "Potential":
        """Read an ``x q(x)`` table; ``#`` starts a comment."""
        data = np.loadtxt(Path(path), comments="#", ndmin=2)
        if data.shape[1] != 2:
            raise DomainError(f"{path}: expected two columns, found {data.shape[1]}")
        pot = cls.tabulated(data[:, 0], data[:, 1])
        if ell is not None and not math.isclose(pot.ell, ell, rel_tol=0, abs_tol=1e-12):
            raise DomainError(f"{path}: first sample x={pot.ell} differs from ell={ell}")
        return pot

    def __call__(self, x: float) -> float:
        if self.kind == "bessel":
            return (self.nu**2 - 0.25) / (x * x)
        return float(np.interp(x, self.x, self.q))

    def describe(self) -> dict:
        if self.kind == "bessel":
            return {"kind": "bessel", "nu": self.nu, "ell": self.ell}
        return {"kind": "tabulated", "ell": self.ell, "samples": int(self.x.size)}


@dataclass(frozen=True)
class SolverParams:
    rtol: float = 1e-12
    atol: float = 1e-14
    method: str = "DOP853"
    start_length: float = 50.0  # first truncation is ell + start_length*max(1, |ell|)
    max_doublings: int = 16
    self_consistency: float = 1e-9
    # m(-0) is extrapolated from z = -10**-k for these k
    minus0_exponents: tuple = (3, 4, 5, 6)
    # growth of |m| between the last two extrapolation nodes that signals m(-0) = inf
    divergence_ratio: float = 2.0


# ---------------------------------------------------------------------------
# derived constants


@dataclass(frozen=True)
class WeylConstants:
    A: float
    B: float
    m: float
    C: float
    D: float
    E: float

    @classmethod
    def from_values(cls, m_i: complex, m0: float, check: bool = True) -> "WeylConstants":
        A, B = m_i.real, -m_i.imag
        E = A - m0
        C = E * E
        if check:
            if not B > 0:
                raise InvariantError(f"Im m(i) must be negative, got {m_i.imag}")
            # tiny negative E from rounding is tolerated and snapped to zero
            if E < -1e-12 * (1 + abs(m0)):
                raise InvariantError(f"Re m(i) = {A} is below m(-0) = {m0}")
            if E < 0:
                E, C = 0.0, 0.0
        return cls(A=A, B=B, m=m0, C=C, D=C + B * B, E=E)

    def as_tuple(self):
        return (self.A, self.B, self.m, self.C, self.D, self.E)


# ---------------------------------------------------------------------------
# models


class WeylModel:
    """Base class. Subclasses implement ``_upper`` (Im z > 0) and ``_negative`` (z < 0).

    ``m(i)`` and ``m(-0)`` are computed once at construction.
    """

    kind = "abstract"

    def __init__(self):
        m_i = complex(self._upper(1j))
        if not m_i.imag < 0:
            raise InvariantError(f"Im m(i) must be negative, got {m_i.imag}")
        self._m_i = m_i
        self._m0_error: Optional[Exception] = None
        self.m0_uncertainty = 0.0
        try:
            self._m0 = float(self._minus0())
        except DivergenceError as exc:
            self._m0 = math.inf
            self._m0_error = exc

    # subclass hooks
    def _upper(self, z: complex) -> complex:
        raise NotImplementedError

    def _negative(self, x: float) -> float:
        raise NotImplementedError

    def _minus0(self) -> float:
        raise NotImplementedError

    @property
    def m_at_i(self) -> complex:
        return self._m_i

    @property
    def m_at_minus0(self) -> float:
        if self._m0_error is not None:
            raise self._m0_error
        return self._m0

    def eval_m(self, z: complex) -> complex:
        """m(z) for Im z != 0 (lower half-plane by reflection) or real z < 0."""
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError(f"z must be finite, got {z}")
        if z.imag > 0:
            if z == 1j:
                return self._m_i
            return complex(self._upper(z))
        if z.imag < 0:
            return self.eval_m(z.conjugate()).conjugate()
        if z.real < 0:
            return complex(self._negative(z.real), 0.0)
        raise DomainError(f"m is not evaluated on the spectrum side of the real axis (z = {z})")

    def eval_m_minus0(self) -> float:
        return self.m_at_minus0

    def constants(self) -> WeylConstants:
        return derived_constants(self)

    def describe(self) -> dict:
        return {"kind": self.kind}


class BesselHalf(WeylModel):
    """q = 0: m(z) = -i sqrt(z) for every ell."""

    kind = "closed_form_nu_half"

    def __init__(self, ell: float = 1.0):
        self.ell = float(ell)
        super().__init__()

    def _upper(self, z):
        return -1j * sqrt_decay(z)

    def _negative(self, x):
        return math.sqrt(-x)

    def _minus0(self):
        return 0.0

    def describe(self):
        return {"kind": self.kind, "nu": 0.5, "ell": self.ell}


class BesselThreeHalf(WeylModel):
    """q = 2/x^2 on [ell, inf); decaying solution e^{ikx}(1 + i/(kx))."""

    kind = "closed_form_nu_three_half"

    def __init__(self, ell: float = 1.0):
        if not ell > 0:
            raise DomainError(f"ell must be positive, got {ell}")
        self.ell = float(ell)
        super().__init__()

    def _upper(self, z):
        k = sqrt_decay(z)
        l = self.ell
        return -1j * k + (1j / (k * l * l)) / (1 + 1j / (k * l))

    def _negative(self, x):
        t = math.sqrt(-x)  # k = i t
        l = self.ell
        return (t / l + 1 / (l * l) + t * t) / (t + 1 / l)

    def _minus0(self):
        return 1.0 / self.ell

    def describe(self):
        return {"kind": self.kind, "nu": 1.5, "ell": self.ell}


class FunctionModel(WeylModel):
    """User-supplied m(z) on the upper half-plane together with m(-0)."""

    kind = "function"

    def __init__(self, func: Callable[[complex], complex], m0: float, name: str = "function"):
        self.func = func
        self.name = name
        self._given_m0 = float(m0)
        super().__init__()

    def _upper(self, z):
        return self.func(z)

    def _negative(self, x):
        return complex(self.func(complex(x, 0.0))).real

    def _minus0(self):
        return self._given_m0

    def describe(self):
        return {"kind": self.kind, "name": self.name}


class PinnedModel(WeylModel):
    """Model known only through m(i) and m(-0).

    Every classification and dual-problem formula depends on these two numbers
    alone, so this is enough to run them; evaluating m elsewhere is refused.
    """

    kind = "pinned"

    def __init__(self, m_i: complex, m0: float, name: str = "pinned"):
        self._given = complex(m_i)
        self._given_m0 = float(m0)
        self.name = name
        super().__init__()

    def _upper(self, z):
        if z == 1j:
            return self._given
        raise DomainError(f"pinned model '{self.name}' is only defined at z = +-i")

    def _negative(self, x):
        raise DomainError(f"pinned model '{self.name}' is only defined at z = +-i")

    def _minus0(self):
        return self._given_m0

    def describe(self):
        return {"kind": self.kind, "name": self.name,
                "m_at_i": [self._given.real, self._given.imag], "m_at_minus0": self._given_m0}


class NumericalWeyl(WeylModel):
    """m(z) for a real potential by backward integration of the Riccati equation.

    w = psi'/psi solves w' = q - z - w^2. Starting from the WKB value
    w(X) = i sqrt(z - q(X)) at a truncation point X and integrating down to ell
    follows the decaying solution (the other one is suppressed going left), and
    m = -w(ell). For Bessel potentials X is doubled until two successive answers
    agree (adaptive DOP853). Tables are constant past their last node, where the
    start value is exact, and are integrated by fixed-step RK4 between nodes.
    """

    kind = "numerical"

    def __init__(self, potential: Potential, params: SolverParams = SolverParams()):
        self.potential = potential
        self.params = params
        self.ell = potential.ell
        self.last_truncation: Optional[float] = None
        super().__init__()

    def _integrate(self, z: complex, X: float) -> complex:
        q = self.potential
        w0 = 1j * sqrt_decay(z - q(X))

        def rhs(x, w):
            return np.array([q(x) - z - w[0] * w[0]])

        sol = solve_ivp(rhs, (X, self.ell), np.array([w0], dtype=complex),
                        method=self.params.method, rtol=self.params.rtol, atol=self.params.atol)
        if not sol.success:
            raise ConvergenceError(f"integrator failed at z={z}, X={X}: {sol.message}")
        w = complex(sol.y[0, -1])
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise ConvergenceError(f"integration blew up at z={z}, X={X}")
        return -w

    def _integrate_table(self, z: complex) -> complex:
        """Fixed-step RK4 node to node (q is linear on each segment, so no step straddles a kink)."""
        xs, qs = self.potential.x, self.potential.q
        w = 1j * sqrt_decay(z - qs[-1])
        step = min(0.01, 1 / (10 * abs(sqrt_decay(z)) + 1e-300))
        for j in range(len(xs) - 1, 0, -1):
            x0, x1 = float(xs[j - 1]), float(xs[j])
            q0, slope = float(qs[j - 1]), float((qs[j] - qs[j - 1]) / (x1 - x0))
            n = max(1, math.ceil((x1 - x0) / step))
            dx = -(x1 - x0) / n
            f = lambda x, w: q0 + slope * (x - x0) - z - w * w
            x = x1
            for _ in range(n):
                k1 = f(x, w)
                k2 = f(x + dx / 2, w + dx / 2 * k1)
                k3 = f(x + dx / 2, w + dx / 2 * k2)
                k4 = f(x + dx, w + dx * k3)
                w = w + dx / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
                x += dx
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise ConvergenceError(f"table integration blew up at z={z}")
        return -w

    def _solve(self, z: complex) -> complex:
        if self.potential.kind == "tabulated":
            # q is constant past the last sample, where w = i sqrt(z - q) holds exactly
            X = float(self.potential.x[-1])
            self.last_truncation = X
            return self._integrate_table(z)
        p = self.params
        scale = max(1.0, abs(self.ell))
        L = p.start_length * scale
        prev = self._integrate(z, self.ell + L)
        for _ in range(p.max_doublings):
            L *= 2
            cur = self._integrate(z, self.ell + L)
            if abs(cur - prev) <= p.self_consistency * max(abs(cur), 1e-300):
                self.last_truncation = self.ell + L
                return cur
            prev = cur
        raise ConvergenceError(
            f"m({z}) did not settle before truncation {self.ell + L:g}; last change {abs(cur - prev):.3e}")

    def _upper(self, z):
        return self._solve(z)

    def _negative(self, x):
        return self._solve(complex(x, 0.0)).real

    def _minus0(self):
        ks = self.params.minus0_exponents
        ts = np.array([10.0 ** (-k / 2) for k in ks])
        vals = np.array([self._negative(-(t * t)) for t in ts])
        if abs(vals[-1]) > self.params.divergence_ratio * abs(vals[-2]) and abs(vals[-1]) > 1.0:
            raise DivergenceError(
                f"m(-eps) grows as eps -> 0 ({vals[-2]:.4g} -> {vals[-1]:.4g}); m(-0) appears infinite")
        value, err = _extrapolate_to_zero(ts, vals)
        self.m0_uncertainty = err
        return value

    def describe(self):
        d = {"kind": self.kind, "potential": self.potential.describe(),
             "m_at_minus0_uncertainty": self.m0_uncertainty}
        return d


def _extrapolate_to_zero(ts, vals):
    """Polynomial extrapolation of vals(t) to t = 0.

    The uncertainty is the change caused by dropping the node farthest from 0.
    """
    full = float(BarycentricInterpolator(ts, vals)(0.0))
    reduced = float(BarycentricInterpolator(ts[1:], vals[1:])(0.0))
    return full, abs(full - reduced)


# ---------------------------------------------------------------------------


def bessel_model(nu: float, ell: float = 1.0, numerical: bool = False,
                 params: SolverParams = SolverParams()) -> WeylModel:
    """Closed form for nu in {1/2, 3/2} unless ``numerical`` is set."""
    if not numerical and nu == 0.5:
        return BesselHalf(ell)
    if not numerical and nu == 1.5:
        return BesselThreeHalf(ell)
    return NumericalWeyl(Potential.bessel(nu, ell), params)


def eval_m(model: WeylModel, z: complex) -> complex:
    return model.eval_m(z)


def eval_m_minus0(model: WeylModel) -> float:
    return model.eval_m_minus0()


def derived_constants(model: WeylModel) -> WeylConstants:
    """(A, B, m, C, D, E) from m(i) = A - iB and m = m(-0)."""
    return WeylConstants.from_values(model.m_at_i, model.m_at_minus0)
