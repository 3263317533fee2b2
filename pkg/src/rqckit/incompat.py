"""Commutator-based mutual incompatibility of two states.

The l1 incompatibility is the entrywise l1 norm of the commutator expressed
in the reference state's eigenbasis; the Frobenius variant is basis-free.
`extremal_state` builds the pure state that saturates the global maximum
sqrt(d-1) against one of its basis projectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .coherence import coherence_l1
from .errors import DegenerateSigma, DimensionMismatch


def commutator(rho: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    if rho.shape != sigma.shape:
        raise DimensionMismatch(f"shapes {rho.shape} and {sigma.shape} differ")
    return rho @ sigma - sigma @ rho


def q_frobenius(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Twice the squared Frobenius norm of the commutator; basis independent."""
    c = commutator(rho, sigma)
    return float(2.0 * np.sum(np.abs(c) ** 2))


def q_l1_weighted(transformed: np.ndarray, eigenvalues: np.ndarray) -> float:
    """sum_{i != j} |lambda_ij (eps_i - eps_j)| for rho already in the basis."""
    diff = np.abs(eigenvalues[:, None] - eigenvalues[None, :])
    return float(np.sum(np.abs(transformed) * diff))


@dataclass(frozen=True)
class IncompatResult:
    q_l1: float
    q_frobenius: float
    basis: np.ndarray
    degenerate_sigma: bool


def q_l1(rho: np.ndarray, sigma: np.ndarray) -> IncompatResult:
    """l1 incompatibility of rho with sigma, in sigma's eigenbasis.

    For a degenerate sigma the deterministic eigenbasis from `herm_eig` is
    used and the result is flagged; cross-block entries could vary with the
    basis choice inside degenerate blocks, and no optimization is attempted.
    """
    if rho.shape != sigma.shape:
        raise DimensionMismatch(f"shapes {rho.shape} and {sigma.shape} differ")
    es = linalg.herm_eig(sigma)
    t = linalg.dagger(es.eigenvectors) @ rho @ es.eigenvectors
    degenerate = any(len(c) > 1 for c in linalg.degenerate_clusters(es.eigenvalues))
    return IncompatResult(
        q_l1=q_l1_weighted(t, es.eigenvalues),
        q_frobenius=q_frobenius(rho, sigma),
        basis=es.eigenvectors,
        degenerate_sigma=degenerate,
    )


@dataclass(frozen=True)
class SumRuleResult:
    lhs: float
    rhs: float
    residual: float


def sum_rule_check(rho: np.ndarray, sigma: np.ndarray) -> SumRuleResult:
    """Compare sum_i Q_l1(rho, |psi_i><psi_i|) against 2 C_l1(rho, sigma).

    Each projector term is evaluated in the basis made of |psi_i> completed
    by sigma's remaining eigenvectors, which is the completion under which
    the identity holds term by term.
    """
    es = linalg.herm_eig(sigma)
    if any(len(c) > 1 for c in linalg.degenerate_clusters(es.eigenvalues)):
        raise DegenerateSigma("sum rule requires a nondegenerate reference state")
    d = sigma.shape[0]
    t = linalg.dagger(es.eigenvectors) @ rho @ es.eigenvectors
    lhs = 0.0
    for i in range(d):
        eps = np.zeros(d)
        eps[i] = 1.0
        lhs += q_l1_weighted(t, eps)
    rhs = 2.0 * coherence_l1(rho, es.eigenvectors)
    return SumRuleResult(lhs=lhs, rhs=rhs, residual=abs(lhs - rhs))


@dataclass(frozen=True)
class ExtremalState:
    state: np.ndarray
    amplitudes: np.ndarray
    thetas: dict[int, float]


def extremal_state(d: int) -> ExtremalState:
    """Pure state maximizing the l1 incompatibility with its first basis projector.

    Amplitudes follow the recursion a_1 = cos(theta_d), a_j = sin(theta_d)
    a_{j-1} of the (d-1)-level state, with theta_2 = theta_d = pi/4 and
    theta_k = pi/2 - arctan(1/sqrt(k-1)) for the intermediate levels; this
    makes the lower (d-1)-dimensional block flat and yields
    Q_l1 = sqrt(d-1) against |psi_1><psi_1|.
    """
    if d < 2:
        raise DimensionMismatch("extremal construction needs d >= 2")
    thetas: dict[int, float] = {2: np.pi / 4.0}
    for k in range(3, d):
        thetas[k] = np.pi / 2.0 - np.arctan(1.0 / np.sqrt(k - 1.0))
    if d >= 3:
        thetas[d] = np.pi / 4.0
    amps = np.array([np.cos(thetas[2]), np.sin(thetas[2])])
    for k in range(3, d + 1):
        amps = np.concatenate(([np.cos(thetas[k])], np.sin(thetas[k]) * amps))
    psi = amps.astype(np.complex128)
    return ExtremalState(
        state=np.outer(psi, psi.conj()), amplitudes=amps, thetas=thetas
    )
