import math

import numpy as np
import pytest

from squeezeops import algebra as alg
from squeezeops import transform as tf
from squeezeops.representations import (
    FockBasis,
    defining_generators,
    expm,
    fock_generators,
    position_momentum,
    realize,
)
from squeezeops.verify import DIRAC_DISTANCE_PIN, DIRAC_PIN_DIM


UNITS = tf.SystemConstants()


def sample_of(beta1=1.0, beta2=0.0, beta3=1.0, **kw):
    return tf.CoefficientSample(t=0.0, beta1=beta1, beta2=beta2, beta3=beta3, **kw)


def test_sample_validation():
    with pytest.raises(ValueError):
        sample_of(beta3=0.0)
    with pytest.raises(ValueError):
        sample_of(beta3=-2.0)
    with pytest.raises(ValueError):
        tf.SystemConstants(m=0.0)
    with pytest.raises(ValueError):
        tf.PhasePoint(math.inf, 0.0)


def test_gamma_mix_frozen():
    assert tf.gamma_mix(sample_of(beta2=0.5), UNITS) == pytest.approx(0.25, abs=1e-16)
    assert tf.gamma_mix(sample_of(beta3_dot=1.0), UNITS) == pytest.approx(-0.25, abs=1e-16)
    two = tf.SystemConstants(omega0=2.0)
    assert tf.gamma_mix(sample_of(beta2=0.5), two) == pytest.approx(0.25)


def test_w1_params_frozen():
    p = tf.w1_params(sample_of(beta3=4.0))
    assert p.theta == 0.0
    assert p.r == pytest.approx(math.log(2.0), abs=1e-15)
    assert p.phi == pytest.approx(math.pi)
    p = tf.w1_params(sample_of(beta3=math.exp(2.0)))
    assert p.r == pytest.approx(1.0, abs=1e-12)
    assert p.phi == pytest.approx(math.pi)
    p = tf.w1_params(sample_of(beta3=0.25))
    assert p.r == pytest.approx(math.log(2.0), abs=1e-15)
    assert p.phi == 0.0
    assert tf.w1_params(sample_of()) == alg.SqueezeParam.identity()


def test_w1_scaling_action():
    # W1 rescales position by 1/sqrt(beta3); squeezing by 2 spreads a level
    # n state across ~4n levels, so the basis must dwarf the checked block
    basis = FockBasis(120)
    gens = fock_generators(basis)
    x, p = position_momentum(basis)
    sample = sample_of(beta3=4.0)
    w = realize(tf.w1_params(sample), gens)
    low = 12
    lhs = (w.conj().T @ x @ w)[:low, :low]
    assert np.abs(lhs - x[:low, :low] / 2.0).max() < 1e-10
    lhs_p = (w.conj().T @ p @ w)[:low, :low]
    assert np.abs(lhs_p - 2.0 * p[:low, :low]).max() < 1e-10


def test_w2_params_frozen():
    p = tf.w2_params(sample_of(beta2=2.0), UNITS)  # gamma = 1
    assert p.theta == pytest.approx(math.pi / 4.0, abs=1e-15)
    assert p.r == pytest.approx(0.881373587019543, abs=1e-15)
    assert p.phi == pytest.approx(math.pi / 4.0, abs=1e-14)
    p = tf.w2_params(sample_of(beta2=0.5), UNITS)  # gamma = 0.25
    assert p.theta == pytest.approx(0.24497866312686414, abs=1e-16)
    assert p.r == pytest.approx(0.24746646154726346, abs=1e-16)
    assert p.phi == pytest.approx(1.3258176636680323, abs=1e-15)
    assert tf.w2_params(sample_of(), UNITS) == alg.SqueezeParam.identity()


def test_w2_matches_generator_exponential():
    # W2 = exp{i gamma (K+ + K- + 2 Ko)} in any representation
    gens = defining_generators()
    for gamma in (-1.5, -0.3, 0.25, 1.0, 2.0):
        direct = expm(1j * gamma * (gens.k_plus + gens.k_minus + 2.0 * gens.k_o))
        viaparam = realize(tf.w2_params(sample_of(beta2=2.0 * gamma), UNITS), gens)
        assert np.abs(direct - viaparam).max() < 1e-12


def test_w_combined_frozen():
    p = tf.w_combined(sample_of(beta2=2.0, beta3=4.0), UNITS)  # gamma = 1
    assert p.theta == pytest.approx(0.38050637711236485, abs=1e-15)
    assert p.r == pytest.approx(0.8098981374282497, abs=1e-15)
    assert p.phi == pytest.approx(2.1730836729298604, abs=1e-14)
    assert tf.w_combined(sample_of(), UNITS) == alg.SqueezeParam.identity()


def test_w_combined_equals_step_product():
    rng = np.random.default_rng(61)
    gens = defining_generators()
    for _ in range(200):
        sample = sample_of(
            beta2=rng.uniform(-2.0, 2.0),
            beta3=rng.uniform(0.2, 5.0),
            beta3_dot=rng.uniform(-1.0, 1.0),
        )
        fused = realize(tf.w_combined(sample, UNITS), gens)
        product = realize(tf.w2_params(sample, UNITS), gens) @ realize(tf.w1_params(sample), gens)
        assert np.abs(fused - product).max() < 1e-12


def test_w_combined_mismatch_raises(monkeypatch):
    good = tf._fused_closed_form

    def skewed(beta3, gamma):
        p = good(beta3, gamma)
        return alg.SqueezeParam(p.theta + 1e-6, p.r, p.phi)

    monkeypatch.setattr(tf, "_fused_closed_form", skewed)
    with pytest.raises(tf.FusionMismatchError) as err:
        tf.w_combined(sample_of(beta2=2.0, beta3=4.0), UNITS)
    assert alg.param_distance(err.value.closed_form, err.value.composed) > tf.FUSION_TOL
    assert "deviates" in str(err.value)


def test_hamiltonian_coefficients_frozen():
    h = tf.h_of(sample_of(beta2=0.5), UNITS)
    assert (h.c_pp, h.c_xp, h.c_xx) == (1.0, 0.25, 0.5)
    h1 = tf.h1_of(sample_of(beta2=0.5), UNITS)
    assert h1.c_pp == 1.0
    assert h1.c_xp == pytest.approx(0.25, abs=1e-16)
    assert h1.c_xx == pytest.approx(0.5, abs=1e-16)
    h1 = tf.h1_of(sample_of(beta1=2.0, beta3=3.0, beta3_dot=0.6), UNITS)
    assert h1.c_xp == pytest.approx(-0.05, abs=1e-15)
    assert h1.c_xx == pytest.approx(3.0, abs=1e-15)


def test_omega_squared_frozen():
    assert tf.omega_squared(sample_of(), UNITS) == pytest.approx(1.0)
    assert tf.omega_squared(sample_of(beta2=0.5), UNITS) == pytest.approx(0.75)
    ho = tf.ho_of(sample_of(beta2=0.5), UNITS)
    assert (ho.c_pp, ho.c_xp) == (1.0, 0.0)
    assert ho.c_xx == pytest.approx(0.375)


def test_omega_squared_exponential_schedule():
    # beta3 = exp(2 a t): rate = 2a, second term cancels to -a^2
    a = 0.3
    for t in (0.0, 0.7, 1.9):
        b3 = math.exp(2.0 * a * t)
        sample = tf.CoefficientSample(
            t=t, beta1=1.0, beta2=0.0, beta3=b3,
            beta3_dot=2.0 * a * b3, beta3_ddot=4.0 * a * a * b3,
        )
        expected = b3 - a * a
        assert tf.omega_squared(sample, UNITS) == pytest.approx(expected, rel=1e-14)


def test_omega_squared_regrouping_identity():
    rng = np.random.default_rng(67)
    for _ in range(500):
        sample = tf.CoefficientSample(
            t=rng.uniform(0, 3),
            beta1=rng.uniform(0.2, 3.0),
            beta2=rng.uniform(-1.5, 1.5),
            beta3=rng.uniform(0.1, 6.0),
            beta2_dot=rng.uniform(-1.0, 1.0),
            beta3_dot=rng.uniform(-2.0, 2.0),
            beta3_ddot=rng.uniform(-2.0, 2.0),
        )
        a = tf.omega_squared(sample, UNITS)
        b = tf._omega_squared_regrouped(sample, UNITS)
        assert a == pytest.approx(b, rel=1e-12, abs=1e-12)


def test_quadform_matrix_oscillator_spectrum():
    basis = FockBasis(40, m=1.3, omega0=0.9, hbar=0.7)
    h = tf.quadform_matrix(tf.QuadForm(1.0, 0.0, 0.5 * basis.m * basis.omega0 ** 2), basis)
    diag = np.diagonal(h).real
    n = np.arange(10)
    assert np.abs(diag[:10] - basis.hbar * basis.omega0 * (n + 0.5)).max() < 1e-12
    off = h[:10, :10] - np.diag(diag[:10])
    assert np.abs(off).max() < 1e-13


def test_phase_space_map_frozen():
    out = tf.phase_space_map(tf.PhasePoint(2.0, 1.0), sample_of(beta3=4.0), UNITS)
    assert (out.x, out.p) == (1.0, 2.0)
    ident = tf.phase_space_map(tf.PhasePoint(0.4, -1.1), sample_of(), UNITS)
    assert (ident.x, ident.p) == (0.4, -1.1)


def test_phase_space_map_is_symplectic():
    rng = np.random.default_rng(71)
    h = 1e-6
    for _ in range(50):
        sample = sample_of(
            beta2=rng.uniform(-1, 1), beta3=rng.uniform(0.2, 5.0),
            beta3_dot=rng.uniform(-1, 1),
        )
        x, p = rng.uniform(-2, 2, size=2)

        def image(xx, pp):
            out = tf.phase_space_map(tf.PhasePoint(xx, pp), sample, UNITS)
            return np.array([out.x, out.p])

        jac = np.column_stack([
            (image(x + h, p) - image(x - h, p)) / (2 * h),
            (image(x, p + h) - image(x, p - h)) / (2 * h),
        ])
        assert np.linalg.det(jac) == pytest.approx(1.0, abs=1e-8)


def test_f2_eval_frozen_and_gradients():
    assert tf.f2_eval(2.0, 3.0, sample_of(beta3=4.0), UNITS) == pytest.approx(3.0)
    rng = np.random.default_rng(73)
    h = 1e-6
    for _ in range(50):
        sample = sample_of(
            beta2=rng.uniform(-1, 1), beta3=rng.uniform(0.2, 5.0),
            beta3_dot=rng.uniform(-1, 1),
        )
        x = rng.uniform(-2, 2)
        p = rng.uniform(-2, 2)
        target = tf.phase_space_map(tf.PhasePoint(x, p), sample, UNITS)
        # generating relations: dF2/dx = p and dF2/dP = X
        p_grad = (tf.f2_eval(x + h, target.p, sample, UNITS)
                  - tf.f2_eval(x - h, target.p, sample, UNITS)) / (2 * h)
        x_grad = (tf.f2_eval(x, target.p + h, sample, UNITS)
                  - tf.f2_eval(x, target.p - h, sample, UNITS)) / (2 * h)
        assert p_grad == pytest.approx(p, rel=1e-7, abs=1e-7)
        assert x_grad == pytest.approx(target.x, rel=1e-7, abs=1e-7)


def test_dirac_mismatch_regression_pin():
    sample = sample_of(beta3=4.0)
    basis = FockBasis(DIRAC_PIN_DIM)
    distance = tf.dirac_mismatch(sample, UNITS, basis)
    assert distance == pytest.approx(DIRAC_DISTANCE_PIN, abs=1e-9)


def test_dirac_mismatch_other_frozen_values():
    assert tf.dirac_mismatch(sample_of(), UNITS, FockBasis(60)) == pytest.approx(
        1.771353246610432, abs=1e-9
    )
    assert tf.dirac_mismatch(sample_of(beta2=0.5), UNITS, FockBasis(60)) == pytest.approx(
        1.7657293371475151, abs=1e-6
    )


def test_dirac_mismatch_xp_ordering():
    sample = sample_of(beta3=4.0)
    weyl = tf.dirac_mismatch(sample, UNITS, FockBasis(DIRAC_PIN_DIM))
    xp = tf.dirac_mismatch(sample, UNITS, FockBasis(DIRAC_PIN_DIM), ordering="xp")
    assert xp == pytest.approx(1.372836335736448, abs=1e-9)
    assert xp != pytest.approx(weyl, abs=1e-3)


def test_dirac_mismatch_report_noise_floor():
    sample = sample_of(beta3=4.0)
    distance, noise = tf.dirac_mismatch_report(sample, UNITS, FockBasis(48))
    assert 0.0 < noise < 0.1 * distance


def test_dirac_mismatch_preconditions():
    with pytest.raises(ValueError):
        tf.dirac_mismatch(sample_of(), UNITS, FockBasis(39))
    with pytest.raises(ValueError):
        tf.dirac_mismatch(sample_of(), UNITS, FockBasis(60), ordering="normal")


def test_dirac_mismatch_flags_excessive_truncation():
    # extreme squeezing pushes amplitude far past any dim-40 truncation
    with pytest.raises(tf.TruncationNoiseError) as err:
        tf.dirac_mismatch(sample_of(beta3=1e12), UNITS, FockBasis(40))
    assert err.value.noise > 0.5 * err.value.distance
