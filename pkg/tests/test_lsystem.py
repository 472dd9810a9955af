import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given
from numpy.testing import assert_allclose

from centropy.errors import DegenerateError, DomainError, NonDissipativeError, PoleError
from centropy.lsystem import (
    INF,
    LSystem,
    dual_mu,
    entropy_report,
    impedance,
    kappa_of,
    mu1_for_class_Mk,
    mu2_for_class_Mk_inv,
    quasi_kernel_xi,
    transfer,
    von_neumann_kappa,
)
from centropy.weyl import PinnedModel

from conftest import dissipative_h, models, mus, upper

R2, R3 = math.sqrt(2), math.sqrt(3)
H0 = complex(-1 / R2, 1 / R2)
# the nu = 3/2 constants as printed for the worked example (m(i) pinned)
PRINTED = PinnedModel(complex(1 + 1 / R2, -0.5), 1.0)
H_PRINTED = complex(-1, R3 / 2)


def test_construction_rejects_non_dissipative(half):
    for h in (1.0, 1 - 1j, complex(0, 0)):
        with pytest.raises(NonDissipativeError) as err:
            LSystem(half, 0.0, h)
        assert err.value.kind == "non-dissipative"
    with pytest.raises(DomainError):
        LSystem(half, float("nan"), 1j)


def test_minus_infinity_is_the_same_point(half):
    assert LSystem(half, -INF, 1j).mu == INF


def test_transfer_closed_forms(half):
    z = 2 + 1j
    assert_allclose(transfer(LSystem(half, INF, H0), z),
                    (1j * cmath.sqrt(2 * z) + 1 + 1j) / (1j * cmath.sqrt(2 * z) + 1 - 1j), rtol=1e-13)
    assert_allclose(transfer(LSystem(half, -1, 1j), z), 1j * (cmath.sqrt(z) + 1) / (cmath.sqrt(z) - 1), rtol=1e-13)


def test_impedance_examples(half):
    assert_allclose(impedance(LSystem(half, -1, 1j), 1j), (R2 - 1) * 1j, atol=1e-14)
    assert_allclose(impedance(LSystem(half, 1, 1j), 1j), (R2 + 1) * 1j, atol=1e-14)
    assert_allclose(impedance(LSystem(half, INF, H0), 1j), 1j, atol=1e-14)


def test_printed_example_two_impedance():
    mu1 = -(2 + R3) / 2
    assert_allclose(impedance(LSystem(PRINTED, mu1, H_PRINTED), 1j), (R3 - R2) * 1j, atol=1e-13)
    assert_allclose(impedance(LSystem(PRINTED, INF, H_PRINTED), 1j), complex(math.sqrt(2 / 3), 1 / R3), atol=1e-13)


def test_pole_is_reported(half):
    # m(i) + h = 0 at h = -m(i): W has a pole at z = i
    with pytest.raises(PoleError) as err:
        transfer(LSystem(half, INF, -half.m_at_i), 1j)
    assert err.value.denominator == 0
    assert isinstance(err.value, ZeroDivisionError)
    # at mu = inf the impedance denominator is m(z) + Re h, and m(-1) = 1 here
    with pytest.raises(PoleError):
        impedance(LSystem(half, INF, -1 + 1j), -1.0)


def test_kappa_examples(half):
    assert kappa_of(half, 1j) == pytest.approx(R2 - 1, abs=1e-15)
    assert kappa_of(half, -half.m_at_i) == 0.0
    assert kappa_of(PRINTED, H_PRINTED) == pytest.approx(R2 / (R3 + 1), abs=1e-15)


def test_entropy_report_examples(half):
    rep = entropy_report(LSystem(half, INF, -half.m_at_i))
    assert (rep.kappa, rep.entropy) == (0.0, INF)
    assert rep.dissipation == pytest.approx(1 / R2)
    rep = entropy_report(LSystem(half, 0.0, 1j))
    assert rep.entropy == pytest.approx(-math.log(R2 - 1), abs=1e-14)
    assert rep.dissipation == 1.0
    rep = entropy_report(LSystem(PRINTED, INF, H_PRINTED))
    assert rep.entropy == pytest.approx(-math.log(R2 / (R3 + 1)), abs=1e-14)


def test_quasi_kernel(half):
    assert quasi_kernel_xi(LSystem(half, INF, H0)) == pytest.approx(-1 / R2)
    assert quasi_kernel_xi(LSystem(half, -1, 1j)) == pytest.approx(1.0)
    assert quasi_kernel_xi(LSystem(PRINTED, INF, H_PRINTED)) == -1.0
    for mu in (-3.0, 0.0, 2.0):
        # the mu-family through h0
        assert quasi_kernel_xi(LSystem(half, mu, H0)) == pytest.approx(-(mu + R2) / (R2 * mu + 1))


def test_quasi_kernel_degenerate_at_re_h(half):
    sys = LSystem(half, 0.5, 0.5 + 1j)  # accepted
    with pytest.raises(DegenerateError):
        quasi_kernel_xi(sys)


def test_dual_mu_is_an_involution():
    h = 0.3 + 1.2j
    assert dual_mu(dual_mu(INF, h), h) == INF
    for mu in (-4.0, 0.0, 2.5):
        assert dual_mu(dual_mu(mu, h), h) == pytest.approx(mu)


def test_mu1_mu2_examples(half):
    assert mu1_for_class_Mk(half, 1j) == pytest.approx(-1.0, abs=1e-14)
    assert mu2_for_class_Mk_inv(half, 1j) == pytest.approx(1.0, abs=1e-14)
    assert mu1_for_class_Mk(PRINTED, H_PRINTED) == pytest.approx(-(2 + R3) / 2, abs=1e-13)
    assert mu2_for_class_Mk_inv(PRINTED, H_PRINTED) == pytest.approx((R3 - 2) / 2, abs=1e-13)
    assert isinstance(mu1_for_class_Mk(half, 1j), float)


def test_mu1_degenerate_and_limits(half):
    with pytest.raises(DegenerateError):
        mu1_for_class_Mk(half, -half.m_at_i)
    # Re h = -Re m(i): the ratio (m(i)+h)/(m(i)+conj h) is real, positive below B and negative above
    M = half.m_at_i
    assert mu1_for_class_Mk(half, complex(-M.real, 0.3)) == INF
    assert mu2_for_class_Mk_inv(half, complex(-M.real, 3.0)) == INF


@given(models, dissipative_h)
def test_mu2_two_formulas_agree(model, h):
    k = kappa_of(model, h)
    assume(0.01 < k < 0.99)
    mu1 = mu1_for_class_Mk(model, h)
    assume(mu1 != INF and abs(mu1 - h.real) > 1e-3)
    mu2 = mu2_for_class_Mk_inv(model, h)
    assume(mu2 != INF)
    assert mu2 == pytest.approx(dual_mu(mu1, h), rel=1e-8, abs=1e-8)


# --- identities ---------------------------------------------------------------------


@given(models, dissipative_h, mus, upper)
def test_symmetry(model, h, mu, z):
    sys = LSystem(model, mu, h)
    try:
        w, wbar = transfer(sys, z), transfer(sys, z.conjugate())
    except PoleError:
        return
    assume(abs(w) < 1e6 and abs(wbar) < 1e6)
    assert abs(w * wbar.conjugate() - 1) <= 1e-10 * max(1.0, abs(w) * abs(wbar))


@given(models, dissipative_h, mus, upper)
def test_cayley_link(model, h, mu, z):
    sys = LSystem(model, mu, h)
    try:
        W, V = transfer(sys, z), impedance(sys, z)
    except PoleError:
        return
    assume(abs(W + 1) > 1e-6 and abs(1 + 1j * V) > 1e-6 and abs(V) < 1e6)
    assert abs(1j * (W - 1) / (W + 1) - V) <= 1e-10 * (1 + abs(V)) / min(1.0, abs(W + 1))
    assert abs((1 - 1j * V) / (1 + 1j * V) - W) <= 1e-10 * (1 + abs(W)) / min(1.0, abs(1 + 1j * V))


@given(models, dissipative_h, mus)
def test_w_at_minus_i_is_kappa(model, h, mu):
    sys = LSystem(model, mu, h)
    assert abs(abs(transfer(sys, -1j)) - von_neumann_kappa(sys)) <= 1e-10


@given(models, dissipative_h)
def test_kappa_is_mu_independent(model, h):
    ks = [von_neumann_kappa(LSystem(model, mu, h)) for mu in (-5, -1, 0, 1, 5, INF)]
    assert max(ks) - min(ks) <= 1e-12


@given(models, dissipative_h)
def test_donoghue_normalization(model, h):
    k = kappa_of(model, h)
    assume(1e-3 < k < 0.999)
    mu1, mu2 = mu1_for_class_Mk(model, h), mu2_for_class_Mk_inv(model, h)
    V1 = impedance(LSystem(model, mu1, h), 1j)
    V2 = impedance(LSystem(model, mu2, h), 1j)
    assert abs(V1 - 1j * (1 - k) / (1 + k)) <= 1e-10 * (1 + abs(V1))
    assert abs(V2 - 1j * (1 + k) / (1 - k)) <= 1e-10 * (1 + abs(V2))


@pytest.mark.parametrize("mu", [-5.0, -1.0, 0.0, 1.0, 5.0, INF])
def test_class_m_for_h_at_minus_m(example_model, mu):
    V = impedance(LSystem(example_model, mu, -example_model.m_at_i), 1j)
    assert abs(V - 1j) <= 1e-12


def test_random_systems_impedance_is_herglotz(half):
    rng = np.random.default_rng(3)
    for _ in range(50):
        h = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3))
        mu = rng.uniform(-5, 5)
        z = complex(rng.uniform(-3, 3), rng.uniform(0.1, 3))
        assert impedance(LSystem(half, mu, h), z).imag > -1e-12
