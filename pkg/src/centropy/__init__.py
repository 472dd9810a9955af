"""c-entropy and dissipation toolkit for half-line Schroedinger L-systems."""

from .classify import (
    DonoghueClass,
    OperatorClass,
    accretive_state_space_mu_range,
    classify_impedance,
    classify_operator,
    extremal_h_from_kappa,
    kappa0_extremal,
    kappa0_sectorial,
    sectorial_h_from_kappa,
)
from .entropy import (
    DualProblemSolution,
    krein_von_neumann_check,
    max_entropy_accretive,
    max_entropy_extremal,
    max_entropy_Mk,
    max_entropy_Mk_inv,
    max_entropy_sectorial,
    min_dissipation_extremal,
    min_dissipation_Mk,
    min_dissipation_Mk_inv,
    min_dissipation_sectorial,
    verify_solution,
)
from .errors import (
    ConvergenceError,
    DegenerateError,
    DivergenceError,
    DomainError,
    InfeasibleEntropyError,
    InfiniteEntropyError,
    LSystemError,
    PoleError,
)
from .lsystem import (
    INF,
    EntropyReport,
    LSystem,
    entropy_report,
    impedance,
    mu1_for_class_Mk,
    mu2_for_class_Mk_inv,
    quasi_kernel_xi,
    transfer,
    von_neumann_kappa,
)
from .weyl import (
    BesselHalf,
    BesselThreeHalf,
    FunctionModel,
    NumericalWeyl,
    PinnedModel,
    Potential,
    SolverParams,
    WeylModel,
    bessel_model,
    derived_constants,
    eval_m,
    eval_m_minus0,
)

__all__ = [
    "accretive_state_space_mu_range",
    "bessel_model",
    "BesselHalf",
    "BesselThreeHalf",
    "classify_impedance",
    "classify_operator",
    "ConvergenceError",
    "DegenerateError",
    "derived_constants",
    "DivergenceError",
    "DomainError",
    "DonoghueClass",
    "DualProblemSolution",
    "entropy_report",
    "EntropyReport",
    "eval_m",
    "eval_m_minus0",
    "extremal_h_from_kappa",
    "FunctionModel",
    "impedance",
    "INF",
    "InfeasibleEntropyError",
    "InfiniteEntropyError",
    "kappa0_extremal",
    "kappa0_sectorial",
    "krein_von_neumann_check",
    "LSystem",
    "LSystemError",
    "max_entropy_accretive",
    "max_entropy_extremal",
    "max_entropy_Mk",
    "max_entropy_Mk_inv",
    "max_entropy_sectorial",
    "min_dissipation_extremal",
    "min_dissipation_Mk",
    "min_dissipation_Mk_inv",
    "min_dissipation_sectorial",
    "mu1_for_class_Mk",
    "mu2_for_class_Mk_inv",
    "NumericalWeyl",
    "OperatorClass",
    "PinnedModel",
    "PoleError",
    "Potential",
    "quasi_kernel_xi",
    "sectorial_h_from_kappa",
    "SolverParams",
    "transfer",
    "verify_solution",
    "von_neumann_kappa",
    "WeylModel",
]

__version__ = "0.1.0"
