"""Verification suites: every library layer checked against its oracle.

Each suite compares a closed-form layer against an independent matrix
computation (2x2 defining representation or truncated Fock space) or
against finite differences, and reports a maximum error with its
tolerance.  :func:`run_verify` executes all suites in a fixed order with
seeded randomization, so the report is deterministic for a given seed.
"""

from __future__ import annotations

import io
import math
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import scenario as scenario_mod
from . import timefunc
from . import transform
from .algebra import (
    GeneratorCoeffs,
    SqueezeParam,
    adjoint_action,
    compose_full,
    compose_pure,
    fragment,
    killing_form,
    param_distance,
)
from .representations import (
    FockBasis,
    defining_generators,
    fock_generators,
    position_momentum,
    project,
    realize,
    realize_fragmentation,
    spectral_norm,
)
from .transform import (
    CoefficientSample,
    SystemConstants,
    dirac_mismatch_report,
    h_of,
    ho_of,
    phase_space_map,
    quadform_matrix,
    w1_params,
    w2_params,
    w_combined,
)

__all__ = ["Check", "SuiteResult", "VerifyReport", "run_verify",
           "DIRAC_DISTANCE_PIN", "DIRAC_PIN_DIM"]

# Mismatch distance for beta3=4, beta2=0 in natural units, recorded once
# from the first oracle run at basis dim 60 (low block 20, weyl ordering)
# and asserted as a regression since.
DIRAC_DISTANCE_PIN = 1.6643732172632606
DIRAC_PIN_DIM = 60


@dataclass(frozen=True)
class Check:
    """One measured error against its tolerance.

    Volatile checks (timings) pass or fail as usual but their measured
    value is left out of the formatted report, which keeps report text
    byte-identical across reruns.
    """

    label: str
    error: float
    tolerance: float
    volatile: bool = False

    @property
    def passed(self):
        return self.error < self.tolerance


@dataclass(frozen=True)
class SuiteResult:
    """All checks of one verification suite."""

    name: str
    checks: tuple
    detail: str = ""

    @property
    def passed(self):
        return all(check.passed for check in self.checks)


@dataclass
class VerifyReport:
    """Fixed-order suite results for one verification run."""

    seed: int
    fock_dim: int
    suites: list = field(default_factory=list)

    @property
    def all_passed(self):
        return all(suite.passed for suite in self.suites)

    def format(self):
        lines = [f"verification run: seed={self.seed} fock_dim={self.fock_dim}"]
        for suite in self.suites:
            for check in suite.checks:
                status = "pass" if check.passed else "FAIL"
                if check.volatile:
                    lines.append(
                        f"{suite.name}: {check.label}: budget={check.tolerance:.17g} {status}"
                    )
                else:
                    lines.append(
                        f"{suite.name}: {check.label}: max_error={check.error:.17g} "
                        f"tolerance={check.tolerance:.17g} {status}"
                    )
            if suite.detail:
                lines.append(f"{suite.name}: {suite.detail}")
        verdict = "ALL SUITES PASSED" if self.all_passed else "SUITE FAILURES PRESENT"
        lines.append(verdict)
        return "\n".join(lines) + "\n"


def _random_param(rng, r_max=1.5):
    return SqueezeParam(
        rng.uniform(-math.pi, math.pi),
        rng.uniform(0.0, r_max),
        rng.uniform(-math.pi, math.pi),
    )


def _suite_group_law(rng):
    gens = defining_generators()
    start = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        first = _random_param(rng)
        second = _random_param(rng)
        combined = realize(compose_full(second, first), gens)
        product = realize(second, gens) @ realize(first, gens)
        worst = max(worst, float(np.abs(combined - product).max()))
    elapsed = time.perf_counter() - start
    return SuiteResult("group-law", (
        Check("compose_full vs 2x2 product", worst, 1e-10),
        Check("runtime under 2 s", elapsed, 2.0, volatile=True),
    ))


def _suite_composition(rng):
    gens = defining_generators()
    worst = 0.0
    for _ in range(1000):
        rho1 = rng.uniform(0.0, 1.5) * np.exp(1j * rng.uniform(-math.pi, math.pi))
        rho2 = rng.uniform(0.0, 1.5) * np.exp(1j * rng.uniform(-math.pi, math.pi))
        pure = compose_pure(rho2, rho1)
        oracle = (realize(SqueezeParam.from_rho(0.0, rho2), gens)
                  @ realize(SqueezeParam.from_rho(0.0, rho1), gens))
        worst = max(worst, float(np.abs(realize(pure, gens) - oracle).max()))
    worst_real = 0.0
    for _ in range(1000):
        rho1 = rng.uniform(-1.5, 1.5)
        rho2 = rng.uniform(-1.5, 1.5)
        pure = compose_pure(rho2, rho1)
        signed = pure.r * math.cos(pure.phi)
        worst_real = max(worst_real, abs(pure.theta), abs(signed - (rho1 + rho2)))
    return SuiteResult("composition-closed-form", (
        Check("compose_pure vs 2x2 product", worst, 1e-10),
        Check("real-phase amplitude addition", worst_real, 1e-12),
    ))


def _suite_fragmentation(rng, fock_dim):
    gens = defining_generators()
    worst = 0.0
    for _ in range(1000):
        param = _random_param(rng)
        direct = realize(param, gens)
        split = realize_fragmentation(fragment(param), gens)
        worst = max(worst, float(np.abs(direct - split).max()))
    basis = FockBasis(fock_dim)
    ops = fock_generators(basis)
    low = fock_dim // 3
    worst_fock = 0.0
    for _ in range(25):
        param = _random_param(rng, r_max=0.5)
        direct = project(realize(param, ops), low)
        split = project(realize_fragmentation(fragment(param), ops), low)
        worst_fock = max(worst_fock, float(np.abs(direct - split).max()))
    return SuiteResult("fragmentation", (
        Check("four-factor product, 2x2", worst, 1e-10),
        Check(f"four-factor product, Fock dim {fock_dim} low {low}", worst_fock, 1e-6),
    ))


def _suite_adjoint(rng):
    gens = defining_generators()
    worst = worst_killing = worst_herm = 0.0
    for _ in range(1000):
        param = _random_param(rng)
        coeffs = GeneratorCoeffs(
            complex(rng.normal(), rng.normal()),
            complex(rng.normal(), rng.normal()),
            complex(rng.normal(), rng.normal()),
        )
        moved = adjoint_action(param, coeffs)
        matrix = realize(param, gens)
        old = (coeffs.c_o * gens.k_o + coeffs.c_plus * gens.k_plus
               + coeffs.c_minus * gens.k_minus)
        new = (moved.c_o * gens.k_o + moved.c_plus * gens.k_plus
               + moved.c_minus * gens.k_minus)
        conjugated = matrix @ old @ np.linalg.inv(matrix)
        worst = max(worst, float(np.abs(conjugated - new).max()))
        worst_killing = max(worst_killing, abs(killing_form(moved) - killing_form(coeffs)))
        c_plus = complex(rng.normal(), rng.normal())
        hermitian = GeneratorCoeffs(rng.normal(), c_plus, c_plus.conjugate())
        moved_h = adjoint_action(param, hermitian)
        worst_herm = max(
            worst_herm,
            abs(complex(moved_h.c_o).imag),
            abs(moved_h.c_minus - complex(moved_h.c_plus).conjugate()),
        )
    return SuiteResult("adjoint", (
        Check("adjoint_action vs 2x2 conjugation", worst, 1e-10),
        Check("Killing form preserved", worst_killing, 1e-10),
        Check("Hermitian combinations stay Hermitian", worst_herm, 1e-12),
    ))


def _suite_fusion(rng, corrupt=False):
    constants = SystemConstants()
    worst = 0.0
    for _ in range(1000):
        beta3 = rng.uniform(0.2, 5.0)
        gamma = rng.uniform(-2.0, 2.0)
        sample = CoefficientSample(t=0.0, beta1=1.0, beta2=2.0 * gamma, beta3=beta3)
        composed = compose_full(w2_params(sample, constants), w1_params(sample))
        if corrupt:
            closed = transform._fused_closed_form(beta3, gamma)
            closed = SqueezeParam(closed.theta + 1e-6, closed.r, closed.phi)
        else:
            try:
                closed = w_combined(sample, constants)
            except transform.FusionMismatchError as exc:
                worst = max(worst, param_distance(exc.closed_form, exc.composed))
                continue
        worst = max(worst, param_distance(closed, composed))
    return SuiteResult("fusion-closed-form", (
        Check("w_combined vs compose_full(w2, w1)", worst, 1e-9),
    ))


def _scenario():
    return scenario_mod.Scenario(
        constants=SystemConstants(),
        beta1=timefunc.parse("1"),
        beta2=timefunc.parse("0.2*cos(t)"),
        beta3=timefunc.parse("1 + 0.1*sin(t)"),
        scan=scenario_mod.ScanGrid(0.0, 3.0, 30),
    )


def _suite_hamiltonian(scenario):
    start = time.perf_counter()
    basis = FockBasis(80)
    ops = fock_generators(basis)
    low = 20
    delta = 1e-4
    constants = scenario.constants
    worst = 0.0
    for t in (0.3, 1.0, 2.5):
        sample = scenario.sample_at(t)
        w_matrix = realize(w_combined(sample, constants), ops)
        h_matrix = quadform_matrix(h_of(sample, constants), basis)
        w_plus = realize(w_combined(scenario.sample_at(t + delta), constants), ops)
        w_minus = realize(w_combined(scenario.sample_at(t - delta), constants), ops)
        w_dag_dot = (w_plus - w_minus).conj().T / (2.0 * delta)
        transformed = (w_matrix @ h_matrix @ w_matrix.conj().T
                       - 1j * constants.hbar * w_matrix @ w_dag_dot)
        target = quadform_matrix(ho_of(sample, constants), basis)
        scale = spectral_norm(project(target, low))
        worst = max(worst, spectral_norm(project(transformed - target, low)) / scale)
    elapsed = time.perf_counter() - start
    return SuiteResult("hamiltonian-transform", (
        Check("W H Wdag - i hbar W dWdag/dt vs target, relative", worst, 1e-3),
        Check("runtime under 30 s", elapsed, 30.0, volatile=True),
    ))


def _suite_phase_space_operators(scenario, fock_dim):
    basis = FockBasis(fock_dim)
    ops = fock_generators(basis)
    x, p = position_momentum(basis)
    low = fock_dim // 3
    constants = scenario.constants
    sample = scenario.sample_at(1.0)
    w_matrix = realize(w_combined(sample, constants), ops)
    root = math.sqrt(sample.beta3)
    shear = transform._momentum_shear(sample, constants)
    x_expected = x / root
    p_expected = root * (p + shear * x)
    x_moved = w_matrix.conj().T @ x @ w_matrix
    p_moved = w_matrix.conj().T @ p @ w_matrix
    err_x = spectral_norm(project(x_moved - x_expected, low))
    err_p = spectral_norm(project(p_moved - p_expected, low))
    return SuiteResult("phase-space-operators", (
        Check("Wdag x W vs scaling closed form", err_x, 1e-6),
        Check("Wdag p W vs shear closed form", err_p, 1e-6),
    ))


def _suite_classical(rng):
    constants = SystemConstants()
    step = 1e-5
    worst_grad = worst_poisson = worst_jacobian = 0.0
    for _ in range(100):
        sample = CoefficientSample(
            t=0.0,
            beta1=rng.uniform(0.2, 3.0),
            beta2=rng.uniform(-1.0, 1.0),
            beta3=rng.uniform(0.2, 5.0),
            beta3_dot=rng.uniform(-1.0, 1.0),
        )
        x = rng.uniform(-2.0, 2.0)
        p = rng.uniform(-2.0, 2.0)
        image = phase_space_map(transform.PhasePoint(x, p), sample, constants)

        def f2(xx, pp):
            return transform.f2_eval(xx, pp, sample, constants)

        grad_x = (f2(x + step, image.p) - f2(x - step, image.p)) / (2.0 * step)
        grad_p = (f2(x, image.p + step) - f2(x, image.p - step)) / (2.0 * step)
        worst_grad = max(
            worst_grad,
            abs(grad_x - p) / (1.0 + abs(p)),
            abs(grad_p - image.x) / (1.0 + abs(image.x)),
        )

        def mapped(xx, pp):
            out = phase_space_map(transform.PhasePoint(xx, pp), sample, constants)
            return out.x, out.p

        dx_dx = (mapped(x + step, p)[0] - mapped(x - step, p)[0]) / (2.0 * step)
        dx_dp = (mapped(x, p + step)[0] - mapped(x, p - step)[0]) / (2.0 * step)
        dp_dx = (mapped(x + step, p)[1] - mapped(x - step, p)[1]) / (2.0 * step)
        dp_dp = (mapped(x, p + step)[1] - mapped(x, p - step)[1]) / (2.0 * step)
        worst_poisson = max(worst_poisson, abs(dx_dx * dp_dp - dx_dp * dp_dx - 1.0))

        root = math.sqrt(sample.beta3)
        worst_jacobian = max(worst_jacobian, abs((1.0 / root) * root - 1.0))
    return SuiteResult("classical-layer", (
        Check("F2 gradients reproduce (p, X), relative", worst_grad, 1e-8),
        Check("Poisson bracket {X, P} = 1", worst_poisson, 1e-8),
        Check("analytic Jacobian determinant = 1", worst_jacobian, 1e-12),
    ))


def _suite_dirac(fock_dim):
    constants = SystemConstants()
    sample = CoefficientSample(t=0.0, beta1=1.0, beta2=0.0, beta3=4.0)
    distance, noise = dirac_mismatch_report(sample, constants, FockBasis(fock_dim))
    checks = [
        Check("10x noise floor below distance", 10.0 * noise, distance),
    ]
    if fock_dim == DIRAC_PIN_DIM:
        pin_distance = distance
    else:
        pin_distance, _ = dirac_mismatch_report(sample, constants, FockBasis(DIRAC_PIN_DIM))
    checks.append(Check("regression vs pinned value", abs(pin_distance - DIRAC_DISTANCE_PIN), 1e-6))
    alt_distance, alt_noise = dirac_mismatch_report(
        sample, constants, FockBasis(fock_dim), ordering="xp"
    )
    checks.append(Check("10x noise floor below distance (xp ordering)",
                        10.0 * alt_noise, alt_distance))
    detail = (f"distance weyl={distance:.17g} noise={noise:.17g} "
              f"xp={alt_distance:.17g}")
    return SuiteResult("dirac-mismatch", tuple(checks), detail=detail)


_CORPUS = (
    "1",
    "t",
    "1 + 0.1*sin(t)",
    "0.2*cos(t)",
    "exp(t)",
    "exp(-t)",
    "sinh(0.5*t)",
    "cosh(t) - sinh(t)",
    "tanh(t)",
    "sqrt(1 + t^2)",
    "ln(1 + t^2)",
    "t^3 - 2*t + 1",
    "(1 + t)^2 / (2 + t)",
    "sin(t)*cos(t)",
    "sin(t^2)",
    "exp(sin(t))",
    "1 / (1 + t^2)",
    "-t + t^2",
    "0.5*(exp(t) + exp(-t))",
    "tanh(sin(t) + 0.2)",
)


def _suite_timefunc(scenario):
    step = 1e-5
    worst = 0.0
    for src in _CORPUS:
        tree = timefunc.parse(timefunc.render(timefunc.parse(src)))
        slope = timefunc.derivative(tree)
        for t in (0.1, 0.7, 1.3, 2.9):
            symbolic = timefunc.evaluate(slope, t)
            fd = (timefunc.evaluate(tree, t + step)
                  - timefunc.evaluate(tree, t - step)) / (2.0 * step)
            worst = max(worst, abs(symbolic - fd) / (1.0 + abs(symbolic)))
    first = io.StringIO()
    second = io.StringIO()
    scenario_mod.run_scan(scenario, first)
    scenario_mod.run_scan(scenario, second)
    identical = 0.0 if first.getvalue() == second.getvalue() else 1.0
    return SuiteResult("timefunc-dsl", (
        Check("symbolic vs central differences, 20-expression corpus", worst, 1e-6),
        Check("scan output byte-identical across reruns", identical, 0.5),
    ))


def run_verify(seed=1, fock_dim=60, corrupt_fusion=False, stream=None):
    """Run every verification suite; print per-suite errors; return report.

    Parameters
    ----------
    seed : int
        Randomization seed shared by all suites.
    fock_dim : int
        Truncated-basis dimension for the Fock-space suites; must be
        at least 40.
    corrupt_fusion : bool
        Test-harness hook: perturb the fused closed form before the
        fusion suite's comparison, to prove the suite catches a wrong
        closed form.
    stream : file-like or None
        Target of the textual report (default standard output).

    Returns
    -------
    VerifyReport
    """
    if not (isinstance(fock_dim, int) and fock_dim >= 40):
        raise ValueError(f"fock_dim must be an integer >= 40, got {fock_dim!r}")
    rng = np.random.default_rng(seed)
    scenario = _scenario()
    report = VerifyReport(seed=seed, fock_dim=fock_dim)
    report.suites.append(_suite_group_law(rng))
    report.suites.append(_suite_composition(rng))
    report.suites.append(_suite_fragmentation(rng, fock_dim))
    report.suites.append(_suite_adjoint(rng))
    report.suites.append(_suite_fusion(rng, corrupt=corrupt_fusion))
    report.suites.append(_suite_hamiltonian(scenario))
    report.suites.append(_suite_phase_space_operators(scenario, fock_dim))
    report.suites.append(_suite_classical(rng))
    report.suites.append(_suite_dirac(fock_dim))
    report.suites.append(_suite_timefunc(scenario))
    if stream is None:
        stream = sys.stdout
    stream.write(report.format())
    return report
