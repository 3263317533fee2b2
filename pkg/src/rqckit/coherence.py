"""Relative quantum coherence: one state's coherence in another's eigenbasis.

For a nondegenerate reference state the reference basis is simply its
eigenbasis.  For a degenerate reference the value is the supremum over the
eigenbasis freedom, computed numerically by random-restart compass search
over block-diagonal unitaries acting inside the degenerate eigenspaces.
Against the maximally mixed state both measures have closed forms
(`max_rqc_mm_l1`, `max_rqc_mm_re`) that bound every basis-wise value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, states
from .errors import DimensionMismatch, UnsupportedDimension
from .optimize import GivensParametrization, compass_max

OPT_INITIAL_STEP = 0.3
OPT_MIN_STEP = 1e-7
OPT_COARSE_STEP = 1e-3
POLISH_CANDIDATES = 3
DEFAULT_RESTARTS = 20


def _canon_measure(measure: str) -> str:
    if measure in ("l1",):
        return "l1"
    if measure in ("re", "relative_entropy"):
        return "re"
    raise ValueError(f"unknown coherence measure {measure!r}")


def _transformed(rho: np.ndarray, basis: np.ndarray) -> np.ndarray:
    if basis.shape != rho.shape:
        raise DimensionMismatch(
            f"basis shape {basis.shape} does not match state shape {rho.shape}"
        )
    return linalg.dagger(basis) @ rho @ basis


def coherence_l1(rho: np.ndarray, basis: np.ndarray) -> float:
    """Sum of off-diagonal magnitudes of rho expressed in the given basis."""
    t = np.abs(_transformed(rho, basis))
    return float(t.sum() - np.trace(t))


def coherence_re(rho: np.ndarray, basis: np.ndarray) -> float:
    """Relative entropy of coherence in bits: S(diagonal part) - S(rho)."""
    p = np.clip(np.diag(_transformed(rho, basis)).real, 0.0, None)
    return linalg.entropy_from_eigenvalues(p) - linalg.vn_entropy(rho)


def _coherence_in_basis(rho, basis, measure):
    return coherence_l1(rho, basis) if measure == "l1" else coherence_re(rho, basis)


@dataclass(frozen=True)
class RqcResult:
    value: float
    measure: str
    basis: np.ndarray
    degenerate_sigma: bool


@dataclass(frozen=True)
class CoherenceOptimum:
    value: float
    basis: np.ndarray
    converged: bool
    restarts: int
    evaluations: int


def _fourier(d: int) -> np.ndarray:
    j = np.arange(d)
    return np.exp(2j * np.pi * np.outer(j, j) / d) / np.sqrt(d)


def max_rqc_numeric(
    rho: np.ndarray,
    measure: str = "re",
    restarts: int = DEFAULT_RESTARTS,
    subspace_constraint=None,
    seed: int = 0,
) -> CoherenceOptimum:
    """Maximize coherence of rho over reference bases by compass search.

    ``subspace_constraint`` is an optional partition of the space into
    orthonormal column blocks; candidate bases are then restricted to
    unitaries block-diagonal over that partition (the eigenbasis freedom of a
    degenerate reference state).  The returned value is a certified lower
    bound on the supremum: the maximum over all bases actually evaluated.
    """
    measure = _canon_measure(measure)
    d = rho.shape[0]
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    if subspace_constraint is None:
        frame = np.eye(d, dtype=np.complex128)
        blocks = [list(range(d))]
    else:
        spans = [np.asarray(b, dtype=np.complex128) for b in subspace_constraint]
        frame = np.hstack(spans)
        if frame.shape != (d, d) or not states.is_orthonormal(frame):
            raise DimensionMismatch("subspace constraint must tile the space orthonormally")
        blocks = []
        start = 0
        for b in spans:
            blocks.append(list(range(start, start + b.shape[1])))
            start += b.shape[1]
    pairs = [
        (p, q) for block in blocks for i, p in enumerate(block) for q in block[i + 1 :]
    ]
    if not pairs:
        value = _coherence_in_basis(rho, frame, measure)
        return CoherenceOptimum(value, frame, True, 0, 1)

    param = GivensParametrization(d, pairs)
    s_rho = linalg.vn_entropy(rho) if measure == "re" else 0.0

    def objective_for(anchor: np.ndarray):
        def f(params_batch: np.ndarray) -> np.ndarray:
            u = param.build_batch(params_batch)
            cols = anchor @ u
            t = np.einsum("bji,jk,bkl->bil", cols.conj(), rho, cols, optimize=True)
            if measure == "l1":
                a = np.abs(t)
                return a.sum(axis=(1, 2)) - np.einsum("bii->b", a)
            p = np.clip(np.einsum("bii->bi", t).real, 0.0, None)
            safe = np.where(p > linalg.EIG_ZERO, p, 1.0)
            return -np.sum(safe * np.log2(safe), axis=1) - s_rho

        return f

    full_freedom = len(blocks) == 1 and len(blocks[0]) == d
    total_evals = 0
    x0 = np.zeros(param.n_params)
    # Stage 1: every restart explores coarsely (step down to 1e-3); stage 2
    # polishes the leading candidates down to the 1e-7 terminal step.
    stage1 = []
    for k in range(restarts):
        if k == 0:
            anchor = frame
        elif k == 1 and full_freedom:
            # eigenbasis x Fourier start: mutually unbiased with respect to
            # rho's eigenbasis, which maximizes the dephased entropy outright.
            anchor = linalg.herm_eig(rho).eigenvectors @ _fourier(d)
        else:
            rng = states.substream(seed, k)
            rot = [states.random_unitary(len(block), rng) for block in blocks]
            blockdiag = np.zeros((d, d), dtype=np.complex128)
            for block, r in zip(blocks, rot):
                blockdiag[np.ix_(block, block)] = r
            anchor = frame @ blockdiag
        res = compass_max(
            objective_for(anchor),
            x0,
            initial_step=OPT_INITIAL_STEP,
            min_step=OPT_COARSE_STEP,
            min_gain=1e-8,
        )
        total_evals += res.evaluations
        stage1.append((res.value, k, res.x, anchor))
    stage1.sort(key=lambda item: (-item[0], item[1]))
    best_val = -np.inf
    best_basis = frame
    all_converged = True
    for value, _, x, anchor in stage1[: min(POLISH_CANDIDATES, len(stage1))]:
        res = compass_max(
            objective_for(anchor),
            x,
            initial_step=OPT_COARSE_STEP * 4.0,
            min_step=OPT_MIN_STEP,
        )
        total_evals += res.evaluations
        all_converged = all_converged and res.converged
        if res.value > best_val:
            best_val = res.value
            best_basis = anchor @ param.build(res.x)
    return CoherenceOptimum(
        value=float(best_val),
        basis=best_basis,
        converged=all_converged,
        restarts=restarts,
        evaluations=total_evals,
    )


def rqc(
    rho: np.ndarray,
    sigma: np.ndarray,
    measure: str = "re",
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
) -> RqcResult:
    """Coherence of rho in the eigenbasis of sigma.

    If sigma has a degenerate spectrum (eigenvalue gap below 1e-10) the
    eigenbasis is not unique; the supremum over the residual freedom is
    computed numerically and the result carries ``degenerate_sigma=True``.
    """
    measure = _canon_measure(measure)
    if rho.shape != sigma.shape:
        raise DimensionMismatch(
            f"state shapes {rho.shape} and {sigma.shape} differ"
        )
    es = linalg.herm_eig(sigma)
    clusters = linalg.degenerate_clusters(es.eigenvalues)
    if all(len(c) == 1 for c in clusters):
        value = _coherence_in_basis(rho, es.eigenvectors, measure)
        return RqcResult(max(value, 0.0), measure, es.eigenvectors, False)
    spans = [es.eigenvectors[:, c] for c in clusters]
    opt = max_rqc_numeric(
        rho, measure, restarts=restarts, subspace_constraint=spans, seed=seed
    )
    return RqcResult(max(opt.value, 0.0), measure, opt.basis, True)


def max_rqc_mm_l1(rho: np.ndarray) -> float:
    """Closed-form maximum l1 coherence over all reference bases."""
    d = rho.shape[0]
    x = states.bloch_coords(rho)
    return float(np.sqrt((d * d - d) / 2.0) * np.linalg.norm(x))


def max_rqc_mm_re(rho: np.ndarray) -> float:
    """Closed-form maximum relative entropy of coherence: log2 d - S(rho)."""
    d = rho.shape[0]
    return float(np.log2(d) - linalg.vn_entropy(rho))


@dataclass(frozen=True)
class MubComplementarity:
    sum_l1_sq: float
    bound_l1: float
    sum_re: float | None
    bound_re: float | None


def mub_complementarity(rho: np.ndarray) -> MubComplementarity:
    """Coherence budget of one state across a full set of mutually unbiased bases.

    The summed squared l1 coherences are bounded by d times the squared
    basis-free maximum (equality for qubits).  For d=3 the summed relative
    entropies are additionally bounded through the difference of the two
    basis-free maxima; the analogous d=2 expression is 0/0 and is not emitted.
    """
    d = rho.shape[0]
    if d not in (2, 3):
        raise UnsupportedDimension(f"complementarity checks cover d in {{2, 3}}, got {d}")
    bases = states.mub_set(d)
    sum_l1_sq = float(sum(coherence_l1(rho, b) ** 2 for b in bases))
    c_l1_max = max_rqc_mm_l1(rho)
    bound_l1 = d * c_l1_max**2
    if d == 2:
        return MubComplementarity(sum_l1_sq, bound_l1, None, None)
    sum_re = float(sum(coherence_re(rho, b) for b in bases))
    bound_re = (d + 1) * max_rqc_mm_re(rho) - c_l1_max**2 * np.log2(d - 1) / (
        d * (d - 2)
    )
    return MubComplementarity(sum_l1_sq, bound_l1, sum_re, float(bound_re))
