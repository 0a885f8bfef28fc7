"""Closed-form calculus for SU(1,1) squeezing operators.

A squeezing operator is parametrized as

    S(theta, rho) = exp(2i*theta*K_o) * exp(rho*K_plus - conj(rho)*K_minus)

with rho = r*exp(i*phi), r >= 0, and generators obeying

    [K_plus, K_minus] = -2*K_o,    [K_o, K_plus] = K_plus,
    [K_o, K_minus] = -K_minus.

The group law closes in these parameters.  Composition is computed on the
open unit disk via eta = tanh(r)*exp(i*phi), where the squeeze part of a
product acts as a Moebius map.  This module implements the parameter-level
operations; matrix realizations used to cross-check them live in
:mod:`squeezeops.representations`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "SqueezeParam",
    "DiskPoint",
    "Fragmentation",
    "GeneratorCoeffs",
    "wrap_angle",
    "argtanh",
    "to_disk",
    "from_disk",
    "transpose_phase",
    "compose_pure",
    "compose_full",
    "fragment",
    "inverse",
    "adjoint_action",
    "killing_form",
    "param_distance",
]

# Inputs with |x| beyond this are treated as a domain error rather than
# silently saturating argtanh.
_ATANH_LIMIT = 1.0 - 1e-15


def wrap_angle(angle):
    """Reduce an angle to the canonical interval (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def argtanh(x):
    """Inverse hyperbolic tangent via 0.5*ln((1+x)/(1-x)).

    Parameters
    ----------
    x : float
        Must satisfy |x| < 1 up to a guard of 1e-15; values inside the
        guard band are clamped, values beyond it raise ``ValueError``.

    Returns
    -------
    float
    """
    if abs(x) > _ATANH_LIMIT:
        if abs(x) > 1.0:
            raise ValueError(f"argtanh argument out of range: {x!r}")
        x = math.copysign(_ATANH_LIMIT, x)
    return 0.5 * math.log((1.0 + x) / (1.0 - x))


@dataclass(frozen=True)
class SqueezeParam:
    """Canonical parameters (theta, r, phi) of a squeezing operator.

    theta and phi are stored wrapped to (-pi, pi], r is non-negative, and
    phi is forced to 0 when r == 0, so equal operators compare equal.
    """

    theta: float
    r: float
    phi: float

    def __post_init__(self):
        if not (self.r >= 0.0 and math.isfinite(self.r)):
            raise ValueError(f"squeeze amplitude must be finite and >= 0, got {self.r!r}")
        object.__setattr__(self, "theta", wrap_angle(self.theta))
        object.__setattr__(self, "phi", 0.0 if self.r == 0.0 else wrap_angle(self.phi))

    @property
    def rho(self):
        """Complex squeeze parameter r*exp(i*phi)."""
        return self.r * cmath.exp(1j * self.phi)

    @classmethod
    def from_rho(cls, theta, rho):
        """Build parameters from a rotation angle and complex rho."""
        rho = complex(rho)
        return cls(theta, abs(rho), cmath.phase(rho))

    @classmethod
    def identity(cls):
        return cls(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class DiskPoint:
    """Point eta on the open unit disk representing a pure squeeze."""

    eta: complex

    def __post_init__(self):
        eta = complex(self.eta)
        if not abs(eta) < 1.0:
            raise ValueError(f"disk coordinate must satisfy |eta| < 1, got |eta| = {abs(eta)!r}")
        object.__setattr__(self, "eta", eta)


@dataclass(frozen=True)
class Fragmentation:
    """Normal-ordered factorization data of a squeezing operator.

    Realized as exp(2i*theta*K_o) * exp(eta*K_plus) * exp(gamma_frag*K_o)
    * exp(-conj(eta)*K_minus) with gamma_frag = ln(1 - |eta|^2) <= 0.
    """

    theta: float
    eta: DiskPoint
    gamma_frag: float

    def __post_init__(self):
        expected = math.log1p(-abs(self.eta.eta) ** 2)
        if not (self.gamma_frag <= 0.0 and abs(self.gamma_frag - expected) < 1e-12):
            raise ValueError(
                f"gamma_frag must equal ln(1 - |eta|^2) = {expected!r}, got {self.gamma_frag!r}"
            )


@dataclass(frozen=True)
class GeneratorCoeffs:
    """Coefficients of c_o*K_o + c_plus*K_plus + c_minus*K_minus."""

    c_o: complex
    c_plus: complex
    c_minus: complex

    def is_hermitian_combination(self, tol=1e-12):
        """True when the combination is Hermitian in any unitary realization.

        Requires c_o real and c_minus = conj(c_plus), because K_plus and
        K_minus are mutual adjoints there.
        """
        return (
            abs(complex(self.c_o).imag) <= tol
            and abs(self.c_minus - complex(self.c_plus).conjugate()) <= tol
        )


def to_disk(param):
    """Map the squeeze part of ``param`` to the unit disk.

    Parameters
    ----------
    param : SqueezeParam

    Returns
    -------
    DiskPoint
        eta = tanh(r) * exp(i*phi).  The rotation angle theta is dropped.
    """
    return DiskPoint(math.tanh(param.r) * cmath.exp(1j * param.phi))


def from_disk(point):
    """Inverse of :func:`to_disk`: a pure squeeze (theta = 0) from eta."""
    eta = point.eta
    return SqueezeParam(0.0, argtanh(abs(eta)), cmath.phase(eta))


def transpose_phase(theta, rho):
    """Move a rotation exp(2i*theta*K_o) from the left of a squeeze factor
    to its right: exp(2i*theta*K_o)*exp(rho*K_plus - ...) equals
    exp(rho'*K_plus - ...)*exp(2i*theta*K_o) with rho' returned here.

    Returns
    -------
    complex
        rho * exp(2i*theta).
    """
    return complex(rho) * cmath.exp(2j * theta)


def _rho_to_eta(rho):
    rho = complex(rho)
    return math.tanh(abs(rho)) * cmath.exp(1j * cmath.phase(rho))


def compose_pure(rho2, rho1):
    """Compose two pure squeezes, second applied after the first.

    The product exp(rho2*K_plus - ...) * exp(rho1*K_plus - ...) is again a
    squeezing operator with a rotation in front.  On the disk the squeeze
    parts combine by the Moebius law

        eta_o = (eta1 + eta2) / (1 + conj(eta1)*eta2)

    and the emergent rotation is theta_o = arg(1 + conj(eta1)*eta2).

    Parameters
    ----------
    rho2, rho1 : complex

    Returns
    -------
    SqueezeParam
        Canonical (theta_o, r_o, phi_o) of the product.
    """
    eta1 = _rho_to_eta(rho1)
    eta2 = _rho_to_eta(rho2)
    den = 1.0 + eta1.conjugate() * eta2
    # |eta1*eta2| < 1 keeps den strictly in the right half plane, so the
    # principal argument is the correct branch.
    assert den.real > 0.0
    eta_o = (eta1 + eta2) / den
    return SqueezeParam(cmath.phase(den), argtanh(abs(eta_o)), cmath.phase(eta_o))


def compose_full(second, first):
    """Group law for full squeezing operators: S(second) * S(first).

    The left factor's trailing rotation exp(2i*theta1*K_o) is transposed
    through the squeeze part of ``second`` before the pure composition,
    then all rotation angles are summed.

    Parameters
    ----------
    second, first : SqueezeParam

    Returns
    -------
    SqueezeParam
    """
    rho2_shifted = transpose_phase(-first.theta, second.rho)
    pure = compose_pure(rho2_shifted, first.rho)
    return SqueezeParam(first.theta + second.theta + pure.theta, pure.r, pure.phi)


def fragment(param):
    """Normal-ordered factorization of a squeezing operator.

    Returns
    -------
    Fragmentation
        Factors realizing S as exp(2i*theta*K_o) * exp(eta*K_plus)
        * exp(gamma_frag*K_o) * exp(-conj(eta)*K_minus), with
        eta = tanh(r)*exp(i*phi) and gamma_frag = ln(1 - |eta|^2).
    """
    point = to_disk(param)
    return Fragmentation(param.theta, point, math.log1p(-abs(point.eta) ** 2))


def inverse(param):
    """Parameters of S(param)^{-1}.

    S(theta, rho)^{-1} = S(-theta, -rho*exp(2i*theta)): undo the squeeze,
    then undo the rotation, with the rotation transposed back through.
    """
    return SqueezeParam.from_rho(-param.theta, -param.rho * cmath.exp(2j * param.theta))


def adjoint_action(param, coeffs):
    """Conjugate a generator combination by a squeezing operator.

    Computes the coefficients of S g S^{-1} for
    g = c_o*K_o + c_plus*K_plus + c_minus*K_minus, using the closed-form
    action on the individual generators with phases theta_p = theta and
    theta_m = theta + phi:

        S K_o S^-1 = cosh(2r) K_o
                     - 0.5 sinh(2r) [e^{i(theta_p+theta_m)} K_plus
                                     + e^{-i(theta_p+theta_m)} K_minus]
        S K_plus S^-1 = cosh(r)^2 e^{2i theta_p} K_plus
                        + sinh(r)^2 e^{-2i theta_m} K_minus
                        - e^{i(theta_p-theta_m)} sinh(2r) K_o
        S K_minus S^-1 = sinh(r)^2 e^{2i theta_m} K_plus
                         + cosh(r)^2 e^{-2i theta_p} K_minus
                         - e^{-i(theta_p-theta_m)} sinh(2r) K_o

    Parameters
    ----------
    param : SqueezeParam
    coeffs : GeneratorCoeffs

    Returns
    -------
    GeneratorCoeffs
    """
    r = param.r
    theta_p = param.theta
    theta_m = param.theta + param.phi
    ch2 = math.cosh(2.0 * r)
    sh2 = math.sinh(2.0 * r)
    ch_sq = math.cosh(r) ** 2
    sh_sq = math.sinh(r) ** 2
    phase_sum = cmath.exp(1j * (theta_p + theta_m))
    phase_diff = cmath.exp(1j * (theta_p - theta_m))
    c_o = (
        coeffs.c_o * ch2
        - coeffs.c_plus * phase_diff * sh2
        - coeffs.c_minus * sh2 / phase_diff
    )
    c_plus = (
        -0.5 * coeffs.c_o * sh2 * phase_sum
        + coeffs.c_plus * ch_sq * cmath.exp(2j * theta_p)
        + coeffs.c_minus * sh_sq * cmath.exp(2j * theta_m)
    )
    c_minus = (
        -0.5 * coeffs.c_o * sh2 / phase_sum
        + coeffs.c_plus * sh_sq * cmath.exp(-2j * theta_m)
        + coeffs.c_minus * ch_sq * cmath.exp(-2j * theta_p)
    )
    return GeneratorCoeffs(c_o, c_plus, c_minus)


def killing_form(coeffs):
    """Quadratic invariant c_o^2 - 4*c_plus*c_minus, preserved by
    :func:`adjoint_action`."""
    return coeffs.c_o ** 2 - 4.0 * coeffs.c_plus * coeffs.c_minus


def param_distance(a, b):
    """Max deviation between two canonical parameter triples.

    Angles are compared modulo 2*pi; the squeeze parts are compared both in
    amplitude and as complex rho so phase differences at noticeable r count.
    """
    return max(
        abs(wrap_angle(a.theta - b.theta)),
        abs(a.r - b.r),
        abs(a.rho - b.rho),
    )
