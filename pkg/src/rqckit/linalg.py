"""Dense complex linear algebra for small Hilbert spaces.

Everything here operates on plain ``numpy`` arrays of ``complex128``.
The eigensolver is a self-contained cyclic Jacobi iteration with a
deterministic sweep order and deterministic handling of degenerate
eigenspaces, so repeated runs produce bit-identical bases.  A batched
LAPACK lane (`eig_batch`, `entropy_batch`) is provided for large random
ensembles; a regression test pins its agreement with `herm_eig`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian

HERMITICITY_TOL = 1e-10
DEGENERACY_GAP = 1e-10
EIG_ZERO = 1e-12
MAX_JACOBI_SWEEPS = 100


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def herm_deviation(m: np.ndarray) -> float:
    """Max-norm distance from the Hermitian part."""
    return float(np.abs(m - dagger(m)).max())


def is_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    return m.shape[0] == m.shape[1] and herm_deviation(m) <= tol


@dataclass(frozen=True)
class HermitianEigensystem:
    """Ascending eigenvalues and matching unit-norm eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


def _jacobi(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi on a Hermitian matrix; returns (diagonal, accumulated unitary)."""
    d = a.shape[0]
    v = np.eye(d, dtype=np.complex128)
    scale = max(1.0, float(np.abs(a).max()))
    stop = 1e-13 * scale
    skip = stop / (10.0 * d)
    for _ in range(MAX_JACOBI_SWEEPS):
        off = 0.0
        for p in range(d - 1):
            row = np.abs(a[p, p + 1 :])
            if row.size:
                off = max(off, float(row.max()))
        if off <= stop:
            return np.diag(a).real.copy(), v
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phase = apq / mag
                tau = (aqq - app) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                se_minus = s * np.conj(phase)
                se_plus = s * phase
                # A <- G† A G with G = [[c, s·phase], [-s·conj(phase), c]] on (p, q)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - se_minus * col_q
                a[:, q] = se_plus * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - se_plus * row_q
                a[q, :] = se_minus * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - se_minus * vq
                v[:, q] = se_plus * vp + c * vq
    raise NoConvergence(
        f"Jacobi sweep limit ({MAX_JACOBI_SWEEPS}) exceeded for dim {d}"
    )


def degenerate_clusters(eigenvalues: np.ndarray, gap: float = DEGENERACY_GAP) -> list[list[int]]:
    """Group ascending eigenvalues into clusters separated by gaps < `gap`."""
    clusters: list[list[int]] = [[0]]
    for i in range(1, eigenvalues.shape[0]):
        if eigenvalues[i] - eigenvalues[i - 1] < gap:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return clusters


def _orthonormalize(cols: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt on the columns, in order."""
    out = cols.astype(np.complex128, copy=True)
    k = out.shape[1]
    for i in range(k):
        for j in range(i):
            out[:, i] -= (out[:, j].conj() @ out[:, i]) * out[:, j]
        out[:, i] /= np.linalg.norm(out[:, i])
    return out


def _phase_fix(vec: np.ndarray) -> np.ndarray:
    """Rotate a global phase so the first component above 1e-8 is real positive."""
    idx = np.flatnonzero(np.abs(vec) > 1e-8)
    lead = vec[idx[0]]
    return vec * (np.conj(lead) / abs(lead))


def _lex_key(vec: np.ndarray) -> tuple[float, ...]:
    key: list[float] = []
    for z in vec:
        key.append(float(z.real))
        key.append(float(z.imag))
    return tuple(key)


def herm_eig(m: np.ndarray) -> HermitianEigensystem:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Eigenvalues come back ascending.  Within any numerically degenerate
    cluster (adjacent gap < 1e-10) the eigenvectors are re-orthonormalized,
    phase-fixed (first component above 1e-8 made real positive), and ordered
    lexicographically so the returned basis is deterministic.

    Raises NotHermitian if ``m`` deviates from its adjoint by more than
    1e-10 in max norm, and NoConvergence after 100 sweeps.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    dev = herm_deviation(m)
    if dev > HERMITICITY_TOL:
        raise NotHermitian(f"asymmetry {dev:.3e} exceeds {HERMITICITY_TOL:.0e}")
    a = (m + dagger(m)) / 2.0
    w, v = _jacobi(a)
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    for cluster in degenerate_clusters(w):
        if len(cluster) == 1:
            v[:, cluster[0]] = _phase_fix(v[:, cluster[0]])
            continue
        sub = _orthonormalize(v[:, cluster])
        for j in range(sub.shape[1]):
            sub[:, j] = _phase_fix(sub[:, j])
        ranking = sorted(range(sub.shape[1]), key=lambda j: _lex_key(sub[:, j]))
        v[:, cluster] = sub[:, ranking]
        w[cluster] = w[np.asarray(cluster)[ranking]]
    return HermitianEigensystem(eigenvalues=w, eigenvectors=v)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product; dimensions multiply."""
    return np.kron(np.asarray(a), np.asarray(b))


def partial_trace(rho: np.ndarray, dims: tuple[int, int], keep: str) -> np.ndarray:
    """Trace out one factor of a bipartite operator.

    ``dims`` is (d_A, d_B); ``keep`` is "A" or "B".
    """
    d_a, d_b = dims
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatch(
            f"state of shape {rho.shape} does not factor as {d_a}x{d_b}"
        )
    r = rho.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return np.einsum("ijkj->ik", r)
    if keep == "B":
        return np.einsum("ijil->jl", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def entropy_from_eigenvalues(w: np.ndarray) -> float:
    """Shannon entropy in bits of a spectrum; values below 1e-12 count as 0."""
    w = np.asarray(w, dtype=float)
    w = w[w > EIG_ZERO]
    if w.size == 0:
        return 0.0
    return float(-np.sum(w * np.log2(w)))


def vn_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy in bits."""
    return entropy_from_eigenvalues(herm_eig(rho).eigenvalues)


def purify(rho: np.ndarray) -> np.ndarray:
    """Purification vector sum_i sqrt(e_i) |psi_i>|i> over the nonzero spectrum.

    The ancilla index runs over the nonzero eigenvalues in descending order,
    so a pure input returns (eigenvector ⊗ |0>) with a one-dimensional ancilla.
    Tracing out the ancilla recovers the input.
    """
    sys_ = herm_eig(rho)
    keep = [i for i in range(sys_.dim) if sys_.eigenvalues[i] > EIG_ZERO]
    keep.sort(key=lambda i: -sys_.eigenvalues[i])
    r = len(keep)
    d = sys_.dim
    psi = np.zeros(d * r, dtype=np.complex128)
    for anc, i in enumerate(keep):
        vec = np.zeros(r, dtype=np.complex128)
        vec[anc] = 1.0
        psi += np.sqrt(sys_.eigenvalues[i]) * np.kron(sys_.eigenvectors[:, i], vec)
    return psi


# ---------------------------------------------------------------------------
# Batched LAPACK lane for large random ensembles.  Per-state code paths use
# herm_eig above; these exist so 10^4..10^5-sample sweeps stay fast.

def eig_batch(mats: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a stack (..., d, d) of Hermitian matrices, ascending."""
    return np.linalg.eigh(mats)


def entropy_batch(mats: np.ndarray) -> np.ndarray:
    """Von Neumann entropies (bits) of a stack of density matrices."""
    w = np.linalg.eigvalsh(mats)
    w = np.where(w > EIG_ZERO, w, 1.0)
    return -np.sum(w * np.log2(w), axis=-1)
