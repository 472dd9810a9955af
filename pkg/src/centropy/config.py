import os

DEFAULT_TOLERANCE = 1e-10
NUMERICAL_TOLERANCE = 1e-6
# half-width of the band |Re h + m| that still counts as extremal
EXTREMAL_BAND = 1e-9
# relative band around D = B treated as the infinite-entropy boundary
INFINITE_ENTROPY_BAND = 1e-12
# relative size below which a quadratic discriminant counts as zero (double root)
ROOT_MERGE_BAND = 1e-14
# kappa within this relative distance of its lower bound is the bound itself
KAPPA_MERGE_BAND = 1e-12
# residual allowed on the imaginary part of mu1/mu2 before it is dropped
REALNESS_BAND = 1e-12

ENV_TOLERANCE = "LSYS_TOLERANCE"


def check_tolerance() -> float:
    """Default identity-check tolerance, overridable through ``LSYS_TOLERANCE``."""
    raw = os.environ.get(ENV_TOLERANCE)
    if not raw:
        return DEFAULT_TOLERANCE
    value = float(raw)
    if not value > 0:
        raise ValueError(f"{ENV_TOLERANCE} must be positive, got {raw!r}")
    return value
