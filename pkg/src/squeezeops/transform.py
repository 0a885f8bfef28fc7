"""Time-dependent canonical transformations of quadratic Hamiltonians.

Starting from time-sampled coefficients of

    H(t) = (1/2m) { beta3 p^2 + beta2 m omega0 [xp + px]
                    + beta1 m^2 omega0^2 x^2 }

this module builds the two step operators W1 (a scaling of x) and W2 (a
position-quadratic phase) as squeeze parameters, fuses them into a single
squeeze W = W2 W1 whose closed form is cross-checked against the generic
composition law, and produces the transformed Hamiltonians, the target
frequency Omega^2(t), the classical generating function with its
phase-space map, and the operator-norm mismatch between W and the naive
exponential of the classical generating function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    SqueezeParam,
    argtanh,
    compose_full,
    param_distance,
)
from .representations import (
    FockBasis,
    expm,
    fock_generators,
    position_momentum,
    project,
    realize,
    spectral_norm,
)

__all__ = [
    "SystemConstants",
    "CoefficientSample",
    "QuadForm",
    "PhasePoint",
    "FusionMismatchError",
    "TruncationNoiseError",
    "gamma_mix",
    "w1_params",
    "w2_params",
    "w_combined",
    "h_of",
    "h1_of",
    "ho_of",
    "omega_squared",
    "quadform_matrix",
    "phase_space_map",
    "f2_eval",
    "dirac_mismatch",
    "dirac_mismatch_report",
]

# Closed forms must match the generic composition this tightly.
FUSION_TOL = 1e-9


@dataclass(frozen=True)
class SystemConstants:
    """Mass, reference angular frequency, and action quantum."""

    m: float = 1.0
    omega0: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m", "omega0", "hbar"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")


@dataclass(frozen=True)
class CoefficientSample:
    """Dimensionless coefficients and their time derivatives at one t."""

    t: float
    beta1: float
    beta2: float
    beta3: float
    beta2_dot: float = 0.0
    beta3_dot: float = 0.0
    beta3_ddot: float = 0.0

    def __post_init__(self):
        if not self.beta3 > 0.0:
            raise ValueError(f"beta3 must be strictly positive, got {self.beta3!r}")


@dataclass(frozen=True)
class QuadForm:
    """Quadratic Hamiltonian c_pp*p^2/(2m) + c_xp*[xp+px] + c_xx*x^2."""

    c_pp: float
    c_xp: float
    c_xx: float


@dataclass(frozen=True)
class PhasePoint:
    """Classical phase-space point."""

    x: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.p)):
            raise ValueError("phase point must be finite")


class FusionMismatchError(ArithmeticError):
    """Closed-form fused parameters disagree with the generic composition.

    The generic composition is the ground truth; the mismatch is surfaced
    with both values rather than silently accepting either.
    """

    def __init__(self, closed_form, composed):
        super().__init__(
            f"fused closed form {closed_form} deviates from generic composition "
            f"{composed} by {param_distance(closed_form, composed):.3e}"
        )
        self.closed_form = closed_form
        self.composed = composed


class TruncationNoiseError(ArithmeticError):
    """Truncation noise too large for the mismatch verdict to be reliable."""

    def __init__(self, distance, noise):
        super().__init__(
            f"truncation noise {noise:.3e} exceeds half the mismatch distance "
            f"{distance:.3e}; enlarge the basis"
        )
        self.distance = distance
        self.noise = noise


def gamma_mix(sample, constants):
    """Dimensionless mixing coefficient of the quadratic-phase step.

    gamma = (1 / 2*omega0) * (omega0*beta2 - beta3_dot / (2*beta3)).
    """
    return (
        constants.omega0 * sample.beta2
        - sample.beta3_dot / (2.0 * sample.beta3)
    ) / (2.0 * constants.omega0)


def w1_params(sample):
    """Squeeze parameters of the scaling step W1.

    rho1 = argtanh((1 - beta3) / (1 + beta3)) = -0.5*ln(beta3) is real;
    negative values are stored canonically as (r = |rho1|, phi = pi).
    """
    rho1 = argtanh((1.0 - sample.beta3) / (1.0 + sample.beta3))
    return SqueezeParam.from_rho(0.0, rho1)


def w2_params(sample, constants):
    """Squeeze parameters of the quadratic-phase step W2.

    With gamma = gamma_mix: theta2 = arctan(gamma) and
    rho2 = arcsinh(gamma) * exp(i*(pi/2 - theta2)), using
    argtanh(gamma / sqrt(1 + gamma^2)) = arcsinh(gamma).
    """
    gamma = gamma_mix(sample, constants)
    theta2 = math.atan(gamma)
    rho2 = math.asinh(gamma) * complex(
        math.cos(math.pi / 2.0 - theta2), math.sin(math.pi / 2.0 - theta2)
    )
    return SqueezeParam.from_rho(theta2, rho2)


def _fused_closed_form(beta3, gamma):
    """Closed-form parameters of the fused squeeze W = W2 W1.

    theta_o = arctan(2*gamma / (1 + beta3));
    r_o = argtanh(sqrt((4*gamma^2 + (1-beta3)^2) / (4*gamma^2 + (1+beta3)^2)));
    phi_o = atan2(2*gamma, 1 - beta3) - atan2(2*gamma, 1 + beta3).

    Both arctangents of the phase are read as two-argument quadrant-aware
    angles: the numerator and denominator are the components of a vector
    whose direction is the angle, which matters once 1 - beta3 turns
    negative.
    """
    two_gamma = 2.0 * gamma
    theta_o = math.atan2(two_gamma, 1.0 + beta3)
    ratio = (two_gamma ** 2 + (1.0 - beta3) ** 2) / (two_gamma ** 2 + (1.0 + beta3) ** 2)
    r_o = argtanh(math.sqrt(ratio))
    phi_o = math.atan2(two_gamma, 1.0 - beta3) - theta_o
    return SqueezeParam(theta_o, r_o, phi_o)


def w_combined(sample, constants):
    """Single-squeeze parameters of W = W2 W1 with an oracle cross-check.

    Evaluates the closed forms and verifies them against
    compose_full(w2_params, w1_params), which is the ground truth.

    Raises
    ------
    FusionMismatchError
        If the closed form deviates from the generic composition by more
        than ``FUSION_TOL`` after canonicalization.
    """
    closed = _fused_closed_form(sample.beta3, gamma_mix(sample, constants))
    composed = compose_full(w2_params(sample, constants), w1_params(sample))
    if param_distance(closed, composed) > FUSION_TOL:
        raise FusionMismatchError(closed, composed)
    return closed


def h_of(sample, constants):
    """Initial Hamiltonian coefficients at one time sample."""
    return QuadForm(
        c_pp=sample.beta3,
        c_xp=constants.omega0 * sample.beta2 / 2.0,
        c_xx=0.5 * constants.m * constants.omega0 ** 2 * sample.beta1,
    )


def h1_of(sample, constants):
    """Hamiltonian after the scaling step W1.

    H1 = p^2/2m + omega0*gamma*[xp+px] + (1/2) m omega0^2 beta1 beta3 x^2,
    i.e. normal-form coefficients (1, 2*gamma, beta1*beta3).
    """
    return QuadForm(
        c_pp=1.0,
        c_xp=constants.omega0 * gamma_mix(sample, constants),
        c_xx=0.5 * constants.m * constants.omega0 ** 2 * sample.beta1 * sample.beta3,
    )


def omega_squared(sample, constants):
    """Squared frequency Omega^2(t) of the final oscillator.

    Omega^2 = omega0^2 (beta1 beta3 - beta2^2)
              + omega0 (beta3_dot beta2 - beta2_dot beta3) / beta3
              + beta3_ddot / (2 beta3) - (3/4) (beta3_dot / beta3)^2.
    """
    w0 = constants.omega0
    b3 = sample.beta3
    rate = sample.beta3_dot / b3
    return (
        w0 ** 2 * (sample.beta1 * b3 - sample.beta2 ** 2)
        + w0 * (sample.beta3_dot * sample.beta2 - sample.beta2_dot * b3) / b3
        + sample.beta3_ddot / (2.0 * b3)
        - 0.75 * rate ** 2
    )


def _omega_squared_regrouped(sample, constants):
    """Omega^2 with the derivative terms grouped as
    (1/2)(beta3_ddot/beta3 - rate^2) - (1/4) rate^2; algebraically equal
    to :func:`omega_squared`, kept to verify the regrouping numerically.
    """
    w0 = constants.omega0
    b3 = sample.beta3
    rate = sample.beta3_dot / b3
    return (
        w0 ** 2 * (sample.beta1 * b3 - sample.beta2 ** 2)
        + w0 * (sample.beta3_dot * sample.beta2 - sample.beta2_dot * b3) / b3
        + 0.5 * (sample.beta3_ddot / b3 - rate ** 2)
        - 0.25 * rate ** 2
    )


def ho_of(sample, constants):
    """Final Hamiltonian: a static-form oscillator at frequency Omega(t).

    H_o = p^2/2m + (1/2) m Omega^2(t) x^2.
    """
    return QuadForm(
        c_pp=1.0,
        c_xp=0.0,
        c_xx=0.5 * constants.m * omega_squared(sample, constants),
    )


def quadform_matrix(form, basis):
    """Truncated Fock-space matrix of a :class:`QuadForm` Hamiltonian."""
    x, p = position_momentum(basis)
    return (
        form.c_pp * (p @ p) / (2.0 * basis.m)
        + form.c_xp * (x @ p + p @ x)
        + form.c_xx * (x @ x)
    )


def _momentum_shear(sample, constants):
    # coefficient of x in P = sqrt(beta3) * (p + coeff * x)
    return (constants.m / sample.beta3) * (
        constants.omega0 * sample.beta2 - sample.beta3_dot / (2.0 * sample.beta3)
    )


def phase_space_map(point, sample, constants):
    """Classical canonical map (x, p) -> (X, P).

    X = beta3^{-1/2} x;
    P = beta3^{1/2} (p + (m/beta3)(omega0 beta2 - beta3_dot/(2 beta3)) x).
    Its Jacobian determinant is 1 identically: the map is symplectic.
    """
    root = math.sqrt(sample.beta3)
    shear = _momentum_shear(sample, constants)
    return PhasePoint(point.x / root, root * (point.p + shear * point.x))


def f2_eval(x, big_p, sample, constants):
    """Classical class-two generating function F2(x, P).

    F2 = (m / 2 beta3)(beta3_dot/(2 beta3) - omega0 beta2) x^2
         + beta3^{-1/2} x P; its x-gradient recovers p and its P-gradient
    recovers X of :func:`phase_space_map`.
    """
    b3 = sample.beta3
    quad = (constants.m / (2.0 * b3)) * (
        sample.beta3_dot / (2.0 * b3) - constants.omega0 * sample.beta2
    )
    return quad * x ** 2 + x * big_p / math.sqrt(b3)


def _low_block_defect(matrix, low):
    """Orthonormality defect of the first ``low`` rows.

    Rows of a unitary are orthonormal, so any deficiency in
    M[:low, :] M[:low, :]^dagger measures amplitude leaking past the
    truncation boundary, which is the noise floor for distances computed
    on the low block.
    """
    rows = np.asarray(matrix)[:low, :]
    gram = rows @ rows.conj().T
    return spectral_norm(gram - np.eye(low))


def _naive_and_fused(sample, constants, basis, ordering):
    if basis.dim < 40:
        raise ValueError(f"basis dim must be >= 40 for a reliable verdict, got {basis.dim}")
    if ordering not in ("weyl", "xp"):
        raise ValueError(f"ordering must be 'weyl' or 'xp', got {ordering!r}")
    x, p = position_momentum(basis)
    root = math.sqrt(sample.beta3)
    big_p = root * (p + _momentum_shear(sample, constants) * x)
    sym = (x @ big_p + big_p @ x) / 2.0
    if ordering == "weyl":
        cross = sym
    else:
        # x P = sym + [x, P]/2 with the commutator i*hbar*sqrt(beta3)
        # substituted analytically; the truncated matrix product would
        # misrepresent the commutator near the basis boundary by O(dim).
        cross = sym + 0.5j * constants.hbar * root * np.eye(basis.dim)
    b3 = sample.beta3
    quad = (constants.m / (2.0 * b3)) * (
        sample.beta3_dot / (2.0 * b3) - constants.omega0 * sample.beta2
    )
    f2_op = quad * (x @ x) + cross / root
    naive = expm(1j / constants.hbar * f2_op)
    fused = realize(w_combined(sample, constants), fock_generators(basis))
    return naive, fused


def dirac_mismatch(sample, constants, basis, ordering="weyl"):
    """Operator-norm distance between exp{(i/hbar) F2(x, P)} and W.

    The classical generating function is promoted to operators by
    substituting the closed form of P in terms of x and p and, by default,
    Weyl-symmetrizing the x*P cross term.  The distance to the fused
    squeeze W is measured on the first dim // 3 states.  A strictly
    positive distance for generic samples shows that exponentiating the
    classical generating function does not reproduce the canonical
    operator, even though the phase-space relations hold.

    Parameters
    ----------
    sample : CoefficientSample
    constants : SystemConstants
    basis : FockBasis
        Needs dim >= 40.
    ordering : {"weyl", "xp"}
        Symmetrization convention for the x*P cross term.

    Returns
    -------
    float

    Raises
    ------
    TruncationNoiseError
        If leakage past the truncation boundary exceeds half the distance,
        which would make the verdict unreliable.
    """
    distance, noise = dirac_mismatch_report(sample, constants, basis, ordering)
    if noise > 0.5 * distance:
        raise TruncationNoiseError(distance, noise)
    return distance


def dirac_mismatch_report(sample, constants, basis, ordering="weyl"):
    """Mismatch distance together with its truncation-noise floor.

    The noise floor combines two measures: the unitarity defect of the
    low rows of both operators (the xp-ordered operator is exp(-1/2)
    times a unitary, so that exact scalar is undone first), and the drift
    of the projected difference block when the basis is enlarged by half.
    The defect alone cannot see truncation error, because the exponential
    of a truncated anti-Hermitian generator is exactly unitary on the
    truncated space; the drift is what actually bounds it.

    Returns
    -------
    (float, float)
        Distance and noise floor, with no reliability gate applied.
    """
    low = basis.dim // 3

    def block_and_defect(b):
        naive, fused = _naive_and_fused(sample, constants, b, ordering)
        naive_unitary = naive * math.exp(0.5) if ordering == "xp" else naive
        defect = max(_low_block_defect(naive_unitary, low), _low_block_defect(fused, low))
        return project(naive - fused, low), defect

    block, defect = block_and_defect(basis)
    bigger = FockBasis(basis.dim + basis.dim // 2, m=basis.m,
                       omega0=basis.omega0, hbar=basis.hbar)
    block_bigger, _ = block_and_defect(bigger)
    drift = spectral_norm(block - block_bigger)
    return spectral_norm(block), max(defect, drift)
