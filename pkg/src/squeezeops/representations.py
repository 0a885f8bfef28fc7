"""Matrix realizations of the SU(1,1) generators.

Two realizations serve as numerical ground truth for the closed-form
calculus in :mod:`squeezeops.algebra`:

* the 2x2 defining (non-unitary) representation, where every parameter
  identity can be checked to machine precision, and
* a truncated Fock-space representation built from bosonic ladder
  operators, which is the physically relevant unitary one.

Only the operations the oracle checks need are provided: a matrix
exponential, the generator matrices, realization of squeezing operators
and their fragmentations, subspace projection, and a spectral norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import Fragmentation, SqueezeParam

__all__ = [
    "expm",
    "AlgebraGenerators",
    "defining_generators",
    "FockBasis",
    "FockOperators",
    "fock_generators",
    "position_momentum",
    "realize",
    "realize_fragmentation",
    "project",
    "spectral_norm",
]

# Truncation order of the Taylor core; after scaling the 1-norm below 1/2
# the series remainder is < 1e-16.
_TAYLOR_ORDER = 17


def expm(matrix):
    """Matrix exponential by scaling and squaring with a Taylor core.

    The argument is scaled by 2**-s until its 1-norm is at most 1/2, the
    exponential of the scaled matrix is summed to fixed order, and the
    result is squared s times.

    Parameters
    ----------
    matrix : array_like
        Square matrix with finite entries.

    Returns
    -------
    numpy.ndarray
        Complex matrix exp(matrix).
    """
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expm needs a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("expm needs finite entries")
    norm = np.linalg.norm(a, 1)
    squarings = 0
    if norm > 0.5:
        squarings = int(math.ceil(math.log2(norm / 0.5)))
        a = a / (2.0 ** squarings)
    eye = np.eye(a.shape[0], dtype=complex)
    result = eye + a / _TAYLOR_ORDER
    for k in range(_TAYLOR_ORDER - 1, 0, -1):
        result = eye + (a / k) @ result
    for _ in range(squarings):
        result = result @ result
    return result


class AlgebraGenerators(NamedTuple):
    """Generator triple (k_o, k_plus, k_minus) in some representation."""

    k_o: np.ndarray
    k_plus: np.ndarray
    k_minus: np.ndarray


def defining_generators():
    """2x2 defining representation of the algebra.

    K_o = diag(1/2, -1/2), K_plus = [[0, 1], [0, 0]],
    K_minus = [[0, 0], [-1, 0]].  The commutators
    [K_plus, K_minus] = -2 K_o and [K_o, K_pm] = +-K_pm hold exactly.
    This representation is not unitary; it is the fast oracle for the
    parameter calculus.
    """
    k_o = np.array([[0.5, 0.0], [0.0, -0.5]], dtype=complex)
    k_plus = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    k_minus = np.array([[0.0, 0.0], [-1.0, 0.0]], dtype=complex)
    return AlgebraGenerators(k_o, k_plus, k_minus)


@dataclass(frozen=True)
class FockBasis:
    """Truncated harmonic-oscillator basis and its physical constants.

    Operators built on this basis are dim x dim matrices in the number
    basis |0>, ..., |dim-1>.  Identities that involve a+ a pairs hold
    exactly only on the low part of the space; checks should project onto
    roughly the first dim // 3 states.
    """

    dim: int
    m: float = 1.0
    omega0: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if not (isinstance(self.dim, int) and self.dim >= 4):
            raise ValueError(f"basis dimension must be an integer >= 4, got {self.dim!r}")
        for name in ("m", "omega0", "hbar"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive")


class FockOperators(NamedTuple):
    """Fock-space generators plus the ladder operators they came from."""

    k_o: np.ndarray
    k_plus: np.ndarray
    k_minus: np.ndarray
    a: np.ndarray
    a_dag: np.ndarray


def fock_generators(basis):
    """Single-mode bosonic realization on a truncated Fock space.

    With a|n> = sqrt(n)|n-1>,

        K_plus = a_dag^2 / 2,  K_minus = a^2 / 2,
        K_o = (a_dag a + 1/2) / 2.

    Parameters
    ----------
    basis : FockBasis

    Returns
    -------
    FockOperators
    """
    dim = basis.dim
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = math.sqrt(n)
    a_dag = a.conj().T
    k_plus = a_dag @ a_dag / 2.0
    k_minus = a @ a / 2.0
    k_o = (a_dag @ a + 0.5 * np.eye(dim)) / 2.0
    return FockOperators(k_o, k_plus, k_minus, a, a_dag)


def position_momentum(basis):
    """Position and momentum matrices on the truncated basis.

    x = sqrt(hbar / (2 m omega0)) (a + a_dag),
    p = i sqrt(m hbar omega0 / 2) (a_dag - a).

    Returns
    -------
    (numpy.ndarray, numpy.ndarray)
    """
    ops = fock_generators(basis)
    x_scale = math.sqrt(basis.hbar / (2.0 * basis.m * basis.omega0))
    p_scale = math.sqrt(basis.m * basis.hbar * basis.omega0 / 2.0)
    x = x_scale * (ops.a + ops.a_dag)
    p = 1j * p_scale * (ops.a_dag - ops.a)
    return x, p


def realize(param, generators):
    """Matrix of S(theta, rho) in the given representation.

    Parameters
    ----------
    param : SqueezeParam
    generators : sequence
        Generator matrices; the first three entries are k_o, k_plus,
        k_minus (so both generator tuples above are accepted).

    Returns
    -------
    numpy.ndarray
        expm(2i*theta*k_o) @ expm(rho*k_plus - conj(rho)*k_minus).
    """
    k_o, k_plus, k_minus = generators[0], generators[1], generators[2]
    rho = param.rho
    rotation = expm(2j * param.theta * np.asarray(k_o, dtype=complex))
    squeeze = expm(rho * np.asarray(k_plus, dtype=complex)
                   - rho.conjugate() * np.asarray(k_minus, dtype=complex))
    return rotation @ squeeze


def realize_fragmentation(frag, generators):
    """Matrix of a fragmentation's four-factor product.

    expm(2i*theta*k_o) @ expm(eta*k_plus) @ expm(gamma_frag*k_o)
    @ expm(-conj(eta)*k_minus); agrees with :func:`realize` of the
    unfragmented operator.
    """
    k_o = np.asarray(generators[0], dtype=complex)
    k_plus = np.asarray(generators[1], dtype=complex)
    k_minus = np.asarray(generators[2], dtype=complex)
    eta = frag.eta.eta
    return (
        expm(2j * frag.theta * k_o)
        @ expm(eta * k_plus)
        @ expm(frag.gamma_frag * k_o)
        @ expm(-eta.conjugate() * k_minus)
    )


def project(matrix, size):
    """Top-left size x size block of a matrix."""
    m = np.asarray(matrix)
    if not 0 < size <= m.shape[0]:
        raise ValueError(f"projection size {size!r} out of range for shape {m.shape}")
    return m[:size, :size].copy()


def spectral_norm(matrix):
    """Largest singular value."""
    return float(np.linalg.norm(np.asarray(matrix), 2))
