import math

import numpy as np
import pytest

from squeezeops import algebra as alg
from squeezeops import representations as rep


def commutator(a, b):
    return a @ b - b @ a


def test_expm_small_cases():
    assert np.abs(rep.expm(np.zeros((3, 3))) - np.eye(3)).max() == 0.0
    a = np.diag([1.0, -2.0, 0.5])
    assert np.abs(rep.expm(a) - np.diag(np.exp([1.0, -2.0, 0.5]))).max() < 1e-14
    # nilpotent: exact polynomial
    n = np.array([[0.0, 3.0], [0.0, 0.0]])
    expected = np.array([[1.0, 3.0], [0.0, 1.0]])
    assert np.abs(rep.expm(n) - expected).max() < 1e-15


def test_expm_vs_scipy():
    scipy_linalg = pytest.importorskip("scipy.linalg")
    rng = np.random.default_rng(41)
    for scale in (0.3, 2.0, 9.0):
        for _ in range(20):
            a = scale * (rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)))
            ours = rep.expm(a)
            ref = scipy_linalg.expm(a)
            assert np.abs(ours - ref).max() < 1e-9 * max(1.0, np.abs(ref).max())


def test_expm_validates_input():
    with pytest.raises(ValueError):
        rep.expm(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        rep.expm(np.array([[np.nan, 0.0], [0.0, 0.0]]))


def test_defining_generator_relations():
    g = rep.defining_generators()
    assert np.array_equal(g.k_o, np.diag([0.5, -0.5]))
    assert np.abs(commutator(g.k_plus, g.k_minus) + 2 * g.k_o).max() < 1e-15
    assert np.abs(commutator(g.k_o, g.k_plus) - g.k_plus).max() < 1e-15
    assert np.abs(commutator(g.k_o, g.k_minus) + g.k_minus).max() < 1e-15
    # defining representation is not unitary: dagger of raising is minus lowering
    assert np.abs(g.k_plus.conj().T + g.k_minus).max() < 1e-15


def test_fock_generator_relations_low_block():
    basis = rep.FockBasis(40)
    g = rep.fock_generators(basis)
    low = basis.dim - 2
    for lhs, rhs in (
        (commutator(g.k_plus, g.k_minus), -2 * g.k_o),
        (commutator(g.k_o, g.k_plus), g.k_plus),
        (commutator(g.k_o, g.k_minus), -g.k_minus),
    ):
        assert np.abs(lhs[:low, :low] - rhs[:low, :low]).max() < 1e-12
    # unitary representation: dagger of raising IS lowering
    assert np.abs(g.k_plus.conj().T - g.k_minus).max() < 1e-12
    assert g.k_o[0, 0] == pytest.approx(0.25)
    assert g.k_plus[2, 0] == pytest.approx(math.sqrt(2.0) / 2.0)
    assert g.a[0, 1] == pytest.approx(1.0)
    assert g.a[1, 2] == pytest.approx(math.sqrt(2.0))
    assert np.abs(g.a_dag - g.a.conj().T).max() == 0.0


def test_fock_basis_validation():
    with pytest.raises(ValueError):
        rep.FockBasis(3)
    with pytest.raises(ValueError):
        rep.FockBasis(10, m=-1.0)
    with pytest.raises(ValueError):
        rep.FockBasis(10.5)


def test_position_momentum_low_block():
    basis = rep.FockBasis(30, m=2.0, omega0=3.0, hbar=0.7)
    x, p = rep.position_momentum(basis)
    low = basis.dim - 1
    canon = commutator(x, p)[:low, :low]
    assert np.abs(canon - 1j * basis.hbar * np.eye(low)).max() < 1e-12
    assert x[0, 1] == pytest.approx(math.sqrt(basis.hbar / (2 * basis.m * basis.omega0)))
    assert np.abs(x - x.conj().T).max() < 1e-15
    assert np.abs(p - p.conj().T).max() < 1e-15


def test_realize_identity_and_unitarity():
    basis = rep.FockBasis(24)
    gens = rep.fock_generators(basis)
    ident = rep.realize(alg.SqueezeParam.identity(), gens)
    assert np.abs(ident - np.eye(basis.dim)).max() < 1e-14
    w = rep.realize(alg.SqueezeParam(0.7, 0.4, -1.2), gens)
    assert np.abs(w @ w.conj().T - np.eye(basis.dim)).max() < 1e-12


def test_realize_group_law_2x2():
    rng = np.random.default_rng(43)
    gens = rep.defining_generators()
    for _ in range(200):
        s1 = alg.SqueezeParam(rng.uniform(-3, 3), rng.uniform(0, 1.5), rng.uniform(-3, 3))
        s2 = alg.SqueezeParam(rng.uniform(-3, 3), rng.uniform(0, 1.5), rng.uniform(-3, 3))
        lhs = rep.realize(s2, gens) @ rep.realize(s1, gens)
        rhs = rep.realize(alg.compose_full(s2, s1), gens)
        assert np.abs(lhs - rhs).max() < 1e-11


def test_fragmentation_matches_direct_2x2():
    rng = np.random.default_rng(47)
    gens = rep.defining_generators()
    for _ in range(200):
        p = alg.SqueezeParam(rng.uniform(-3, 3), rng.uniform(0, 1.5), rng.uniform(-3, 3))
        direct = rep.realize(p, gens)
        split = rep.realize_fragmentation(alg.fragment(p), gens)
        assert np.abs(direct - split).max() < 1e-11


def test_fragmentation_final_factor_needs_conjugate():
    # replacing -conj(eta) with -eta in the final factor breaks complex phases
    gens = rep.defining_generators()
    p = alg.SqueezeParam(0.3, 0.8, 1.1)
    frag = alg.fragment(p)
    direct = rep.realize(p, gens)
    eta = frag.eta.eta
    wrong = (
        rep.expm(2j * frag.theta * gens.k_o)
        @ rep.expm(eta * gens.k_plus)
        @ rep.expm(frag.gamma_frag * gens.k_o)
        @ rep.expm(-eta * gens.k_minus)
    )
    assert np.abs(direct - wrong).max() > 1e-2
    good = (
        rep.expm(2j * frag.theta * gens.k_o)
        @ rep.expm(eta * gens.k_plus)
        @ rep.expm(frag.gamma_frag * gens.k_o)
        @ rep.expm(-eta.conjugate() * gens.k_minus)
    )
    assert np.abs(direct - good).max() < 1e-12


def test_fragmentation_fock_low_block():
    basis = rep.FockBasis(48)
    gens = rep.fock_generators(basis)
    rng = np.random.default_rng(53)
    low = basis.dim // 3
    for _ in range(10):
        p = alg.SqueezeParam(rng.uniform(-3, 3), rng.uniform(0, 0.5), rng.uniform(-3, 3))
        direct = rep.realize(p, gens)
        split = rep.realize_fragmentation(alg.fragment(p), gens)
        assert rep.spectral_norm((direct - split)[:low, :low]) < 1e-6


def test_project_and_spectral_norm():
    m = np.arange(16.0).reshape(4, 4)
    assert np.array_equal(rep.project(m, 2), m[:2, :2])
    with pytest.raises(ValueError):
        rep.project(m, 5)
    u = np.array([[0.0, 2.0], [0.0, 0.0]])
    assert rep.spectral_norm(u) == pytest.approx(2.0)
