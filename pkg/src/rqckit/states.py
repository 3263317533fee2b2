"""Density-matrix construction, validation, random sampling, and operator bases.

Random sampling is backed by numpy's PCG64 generator.  Every sampler takes a
``seed`` that may be an int or a tuple of ints; sweeps derive one substream
per sample as ``(master_seed, sample_index)`` so parallel evaluation order
cannot change results.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    InvalidProbabilities,
    InvalidRank,
    NotHermitian,
    NotPSD,
    TraceNotOne,
    UnsupportedDimension,
)

TRACE_TOL = 1e-10
PSD_TOL = 1e-10
ORTHO_TOL = 1e-10

Seed = "int | tuple[int, ...] | np.random.Generator"


def rng_from(seed) -> np.random.Generator:
    """Generator from an int seed, a tuple of ints, or a Generator (passed through)."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def substream(master_seed: int, index: int) -> np.random.Generator:
    """Independent, reproducible stream for sample `index` of a sweep."""
    return np.random.default_rng((master_seed, index))


@dataclass(frozen=True)
class BipartiteState:
    """A density matrix together with its A x B factorization."""

    mat: np.ndarray
    d_a: int
    d_b: int
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.mat.shape != (self.d_a * self.d_b, self.d_a * self.d_b):
            raise DimensionMismatch(
                f"matrix of shape {self.mat.shape} does not factor as "
                f"{self.d_a}x{self.d_b}"
            )

    @property
    def dim(self) -> int:
        return self.d_a * self.d_b

    def rho_a(self) -> np.ndarray:
        return linalg.partial_trace(self.mat, (self.d_a, self.d_b), "A")

    def rho_b(self) -> np.ndarray:
        return linalg.partial_trace(self.mat, (self.d_a, self.d_b), "B")


def validate(mat: np.ndarray) -> np.ndarray:
    """Check Hermiticity, unit trace, and positivity; return a cleaned copy.

    Eigenvalues are clipped to [0, 1] only inside the tolerance band and the
    state is renormalized, so the output is an exact density matrix.
    """
    mat = np.asarray(mat, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {mat.shape}")
    dev = linalg.herm_deviation(mat)
    if dev > linalg.HERMITICITY_TOL:
        raise NotHermitian(f"asymmetry {dev:.3e} exceeds tolerance")
    tr = complex(np.trace(mat))
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceNotOne(f"trace {tr} differs from 1 beyond tolerance")
    eig = linalg.herm_eig(mat)
    if eig.eigenvalues[0] < -PSD_TOL:
        raise NotPSD(f"minimum eigenvalue {eig.eigenvalues[0]:.3e} below -{PSD_TOL:.0e}")
    w = np.clip(eig.eigenvalues, 0.0, 1.0)
    v = eig.eigenvectors
    rho = (v * w) @ linalg.dagger(v)
    rho = rho / np.trace(rho).real
    return (rho + linalg.dagger(rho)) / 2.0


def is_orthonormal(basis: np.ndarray, tol: float = ORTHO_TOL) -> bool:
    g = linalg.dagger(basis) @ basis
    return bool(np.abs(g - np.eye(basis.shape[1])).max() <= tol)


def _ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_pure(d: int, seed) -> np.ndarray:
    """Haar-random pure state |phi><phi| on C^d, deterministic per seed."""
    rng = rng_from(seed)
    phi = _ginibre(rng, d, 1)[:, 0]
    phi /= np.linalg.norm(phi)
    return np.outer(phi, phi.conj())


def random_pure_vector(d: int, seed) -> np.ndarray:
    rng = rng_from(seed)
    phi = _ginibre(rng, d, 1)[:, 0]
    return phi / np.linalg.norm(phi)


def random_density(d: int, rank: int, seed) -> np.ndarray:
    """Ginibre-induced random density matrix G G†/tr(G G†) of the given rank."""
    if not (1 <= rank <= d):
        raise InvalidRank(f"rank must satisfy 1 <= rank <= {d}, got {rank}")
    rng = rng_from(seed)
    g = _ginibre(rng, d, rank)
    rho = g @ linalg.dagger(g)
    return rho / np.trace(rho).real


def random_unitary(d: int, seed) -> np.ndarray:
    """Haar-distributed unitary: QR of a Ginibre matrix with phase correction."""
    rng = rng_from(seed)
    q, r = np.linalg.qr(_ginibre(rng, d, d))
    lam = np.diag(r).copy()
    lam /= np.abs(lam)
    return q * lam


def random_density_batch(d: int, rank: int, n: int, seed) -> np.ndarray:
    """Stack of n Ginibre-induced states, drawn from a single stream."""
    if not (1 <= rank <= d):
        raise InvalidRank(f"rank must satisfy 1 <= rank <= {d}, got {rank}")
    rng = rng_from(seed)
    g = rng.standard_normal((n, d, rank)) + 1j * rng.standard_normal((n, d, rank))
    rho = g @ np.conj(np.transpose(g, (0, 2, 1)))
    tr = np.trace(rho, axis1=1, axis2=2).real
    return rho / tr[:, None, None]


def random_pure_batch(d: int, n: int, seed) -> np.ndarray:
    rng = rng_from(seed)
    phi = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    phi /= np.linalg.norm(phi, axis=1)[:, None]
    return phi[:, :, None] * phi.conj()[:, None, :]


# ---------------------------------------------------------------------------
# Orthonormal Hermitian operator basis (traceless, tr(X_i X_j) = 2 delta_ij).
# Ordering: for each index pair (j, k) with j < k in lexicographic order the
# symmetric matrix comes first and the antisymmetric one second, so the
# coordinate pair (x_{2r-1}, x_{2r}) belongs to the r-th off-diagonal element;
# the d-1 diagonal matrices come last.

def gell_mann_basis(d: int) -> list[np.ndarray]:
    if d < 2:
        raise UnsupportedDimension("operator basis needs d >= 2")
    out: list[np.ndarray] = []
    for j in range(d - 1):
        for k in range(j + 1, d):
            sym = np.zeros((d, d), dtype=np.complex128)
            sym[j, k] = 1.0
            sym[k, j] = 1.0
            out.append(sym)
            anti = np.zeros((d, d), dtype=np.complex128)
            anti[j, k] = -1j
            anti[k, j] = 1j
            out.append(anti)
    for l in range(1, d):
        diag = np.zeros((d, d), dtype=np.complex128)
        diag[np.arange(l), np.arange(l)] = 1.0
        diag[l, l] = -l
        out.append(diag * np.sqrt(2.0 / (l * (l + 1))))
    return out


def bloch_coords(rho: np.ndarray) -> np.ndarray:
    """Coordinates x_i = tr(rho X_i) in the operator basis above."""
    d = rho.shape[0]
    return np.array(
        [np.trace(rho @ x).real for x in gell_mann_basis(d)], dtype=float
    )


def state_from_bloch(x: np.ndarray, d: int) -> np.ndarray:
    """Inverse of bloch_coords: I/d + (1/2) sum_i x_i X_i."""
    basis = gell_mann_basis(d)
    if len(x) != len(basis):
        raise DimensionMismatch(f"expected {len(basis)} coordinates, got {len(x)}")
    rho = np.eye(d, dtype=np.complex128) / d
    for xi, mat in zip(x, basis):
        rho += 0.5 * xi * mat
    return rho


# ---------------------------------------------------------------------------
# Mutually unbiased bases for d in {2, 3}.

def mub_set(d: int) -> list[np.ndarray]:
    """d+1 mutually unbiased bases: Z/X/Y eigenbases for d=2, the prime-d
    Fourier/phase construction for d=3."""
    if d == 2:
        s = 1.0 / np.sqrt(2.0)
        z = np.eye(2, dtype=np.complex128)
        x = np.array([[s, s], [s, -s]], dtype=np.complex128)
        y = np.array([[s, s], [1j * s, -1j * s]], dtype=np.complex128)
        return [z, x, y]
    if d == 3:
        omega = np.exp(2j * np.pi / 3.0)
        bases = [np.eye(3, dtype=np.complex128)]
        for k in range(3):
            b = np.zeros((3, 3), dtype=np.complex128)
            for j in range(3):
                for m in range(3):
                    b[m, j] = omega ** ((j * m + k * m * m) % 3)
            bases.append(b / np.sqrt(3.0))
        return bases
    raise UnsupportedDimension(f"mutually unbiased bases provided only for d in {{2, 3}}, got {d}")


# ---------------------------------------------------------------------------
# Named-state generators.

def maximally_mixed(d: int) -> np.ndarray:
    return np.eye(d, dtype=np.complex128) / d


def bell_state() -> BipartiteState:
    """|Phi+><Phi+| on two qubits."""
    psi = np.zeros(4, dtype=np.complex128)
    psi[0] = psi[3] = 1.0 / np.sqrt(2.0)
    return BipartiteState(np.outer(psi, psi.conj()), 2, 2)


def werner_state(p: float) -> BipartiteState:
    """p |Phi+><Phi+| + (1-p) I/4."""
    if not (0.0 <= p <= 1.0):
        raise InvalidProbabilities(f"mixing weight must lie in [0, 1], got {p}")
    mat = p * bell_state().mat + (1.0 - p) * np.eye(4, dtype=np.complex128) / 4.0
    return BipartiteState(mat, 2, 2)


def quantum_classical_state(
    probs, rho_a_list, basis_b: np.ndarray
) -> BipartiteState:
    """sum_l p_l rho_{A|l} x |phi_l><phi_l|, classical on B in the pointer basis."""
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or np.any(p < -1e-12) or abs(p.sum() - 1.0) > 1e-10:
        raise InvalidProbabilities(f"weights {p} are not a probability distribution")
    d_b = basis_b.shape[0]
    if basis_b.shape != (d_b, len(p)) and basis_b.shape != (d_b, d_b):
        raise DimensionMismatch("pointer basis must have one column per weight")
    if not is_orthonormal(basis_b[:, : len(p)]):
        raise DimensionMismatch("pointer basis columns must be orthonormal")
    d_a = rho_a_list[0].shape[0]
    mat = np.zeros((d_a * d_b, d_a * d_b), dtype=np.complex128)
    for l, (w, rho_a) in enumerate(zip(p, rho_a_list)):
        phi = basis_b[:, l]
        mat += w * linalg.kron(rho_a, np.outer(phi, phi.conj()))
    return BipartiteState(mat, d_a, d_b, meta={"pointer_basis": basis_b})


def araki_lieb_product_state(
    psi_ab_left: np.ndarray, d_a: int, d_b_left: int, rho_b_right: np.ndarray
) -> BipartiteState:
    """Pure |psi><psi| on A x B_left tensored with rho on B_right.

    The B factor is B_left x B_right; the factorization is recorded in meta.
    """
    psi = np.asarray(psi_ab_left, dtype=np.complex128)
    if psi.shape != (d_a * d_b_left,):
        raise DimensionMismatch(
            f"pure vector of shape {psi.shape} does not factor as {d_a}x{d_b_left}"
        )
    psi = psi / np.linalg.norm(psi)
    d_b_right = rho_b_right.shape[0]
    mat = linalg.kron(np.outer(psi, psi.conj()), rho_b_right)
    return BipartiteState(
        mat,
        d_a,
        d_b_left * d_b_right,
        meta={"d_b_left": d_b_left, "d_b_right": d_b_right},
    )


def named_state(kind: str, **params) -> BipartiteState:
    """Dispatcher over the generator family above."""
    if kind == "maximally_mixed":
        d = params["d"]
        d_a = params.get("d_a", 1)
        d_b = params.get("d_b", d if d_a == 1 else d // d_a)
        return BipartiteState(maximally_mixed(d), d_a, d_b)
    if kind == "bell":
        return bell_state()
    if kind == "werner":
        return werner_state(params["p"])
    if kind == "quantum_classical":
        return quantum_classical_state(
            params["probs"], params["rho_a_list"], params["basis_b"]
        )
    if kind == "araki_lieb_product":
        return araki_lieb_product_state(
            params["psi_ab_left"],
            params["d_a"],
            params["d_b_left"],
            params["rho_b_right"],
        )
    raise UnsupportedDimension(f"unknown state family {kind!r}")
