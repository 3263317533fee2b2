"""Bipartite correlation measures built on local projective measurements.

Measurement optimization is exact-mode for qubit parties: a rank-1
projective qubit measurement is two angles on the Bloch sphere, searched on
a 64x128 grid and polished by compass search down to a 1e-9 angular step.
Parties with dimension above two fall back to a Givens-parametrized
unitary search and carry ``heuristic=True`` in the optimizer metadata.

Values in the rounding band [-1e-9, 0) are clipped to zero; anything below
that raises ConsistencyError.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .coherence import coherence_re
from .errors import ConsistencyError, DimensionMismatch, NotPure
from .optimize import GivensParametrization, compass_max, compass_min
from .states import BipartiteState, is_orthonormal, substream

GRID_THETA = 64
GRID_PHI = 128
REFINE_MIN_STEP = 1e-9
MEASURE_CLIP = 1e-9

PAULI_Y = np.array([[0.0, -1j], [1j, 0.0]], dtype=np.complex128)


@dataclass(frozen=True)
class ProductMeasurement:
    """Local orthonormal bases whose columns define rank-1 projectors."""

    basis_a: np.ndarray
    basis_b: np.ndarray

    def __post_init__(self):
        if not is_orthonormal(self.basis_a) or not is_orthonormal(self.basis_b):
            raise DimensionMismatch("measurement bases must be orthonormal")


@dataclass(frozen=True)
class OptMeta:
    converged: bool
    evaluations: int
    restarts: int = 1
    heuristic: bool = False


def _clip_measure(x: float, name: str) -> float:
    if x < -MEASURE_CLIP:
        raise ConsistencyError(f"{name} = {x:.3e} is negative beyond rounding")
    return 0.0 if x < 0.0 else float(x)


# ---------------------------------------------------------------------------
# Measurement maps.

def measure_A(state: BipartiteState, basis_a: np.ndarray) -> BipartiteState:
    """Dephase party A in the given basis: sum_k (P_k x I) rho (P_k x I)."""
    d_a, d_b = state.d_a, state.d_b
    if basis_a.shape != (d_a, d_a):
        raise DimensionMismatch(
            f"A-basis shape {basis_a.shape} does not match d_a={d_a}"
        )
    w = linalg.kron(basis_a, np.eye(d_b))
    t = (linalg.dagger(w) @ state.mat @ w).reshape(d_a, d_b, d_a, d_b)
    out = np.zeros_like(t)
    for k in range(d_a):
        out[k, :, k, :] = t[k, :, k, :]
    mat = w @ out.reshape(state.dim, state.dim) @ linalg.dagger(w)
    return BipartiteState(mat, d_a, d_b)


def measure_AB(state: BipartiteState, m: ProductMeasurement) -> BipartiteState:
    """Dephase both parties; the result is diagonal in the product basis."""
    if m.basis_a.shape != (state.d_a, state.d_a) or m.basis_b.shape != (
        state.d_b,
        state.d_b,
    ):
        raise DimensionMismatch("measurement does not match the state factorization")
    w = linalg.kron(m.basis_a, m.basis_b)
    p = np.clip(np.diag(linalg.dagger(w) @ state.mat @ w).real, 0.0, None)
    mat = (w * p) @ linalg.dagger(w)
    return BipartiteState(mat, state.d_a, state.d_b)


# ---------------------------------------------------------------------------
# Vectorized qubit-measurement kernels.

def _qubit_vectors(thetas, phis) -> np.ndarray:
    """Measurement vector pairs; shape (..., outcome, component)."""
    thetas = np.asarray(thetas, dtype=float)
    phis = np.asarray(phis, dtype=float)
    c = np.cos(thetas / 2.0)
    s = np.sin(thetas / 2.0)
    e = np.exp(1j * phis)
    v0 = np.stack([c + 0j, s * e], axis=-1)
    v1 = np.stack([-s * e.conj(), c + 0j], axis=-1)
    return np.stack([v0, v1], axis=-2)


def _qubit_grid(n_theta: int = GRID_THETA, n_phi: int = GRID_PHI):
    thetas = (np.arange(n_theta) + 0.5) * np.pi / n_theta
    phis = np.arange(n_phi) * 2.0 * np.pi / n_phi
    th, ph = np.meshgrid(thetas, phis, indexing="ij")
    return th.ravel(), ph.ravel()


def _angles_of_qubit_vector(v: np.ndarray) -> tuple[float, float]:
    theta = 2.0 * np.arctan2(abs(v[1]), abs(v[0]))
    phi = float(np.angle(v[1] * np.conj(v[0]))) if abs(v[0]) > 1e-12 else 0.0
    return float(theta), phi


def _a_blocks(rho_r: np.ndarray, vecs: np.ndarray) -> np.ndarray:
    """Unnormalized B-operators <v_k| rho |v_k> for batched A-vectors."""
    return np.einsum("...ka,...kb,aibj->...kij", vecs.conj(), vecs, rho_r, optimize=True)


def _block_eigs(blocks: np.ndarray) -> np.ndarray:
    m = blocks.shape[-1]
    if m == 2:
        b00 = blocks[..., 0, 0].real
        b11 = blocks[..., 1, 1].real
        tr = b00 + b11
        det = (blocks[..., 0, 0] * blocks[..., 1, 1] - blocks[..., 0, 1] * blocks[..., 1, 0]).real
        disc = np.sqrt(np.clip(tr * tr / 4.0 - det, 0.0, None))
        w = np.stack([tr / 2.0 - disc, tr / 2.0 + disc], axis=-1)
    else:
        w = np.linalg.eigvalsh(blocks)
    return np.clip(w, 0.0, None)


def _entropy_rows(w: np.ndarray) -> np.ndarray:
    """Shannon entropy in bits along the last axis, 0 log 0 = 0."""
    safe = np.where(w > linalg.EIG_ZERO, w, 1.0)
    return -np.sum(safe * np.log2(safe), axis=-1)


def _cond_entropy_from_blocks(blocks: np.ndarray) -> np.ndarray:
    """sum_k p_k S(block_k / p_k) over the outcome axis (-3)."""
    w = _block_eigs(blocks)
    p = w.sum(axis=-1)
    denom = np.where(p[..., None] > 1e-14, p[..., None], 1.0)
    u = np.where(p[..., None] > 1e-14, w / denom, 0.0)
    return np.sum(p * _entropy_rows(u), axis=-1)


def _pooled_entropy_from_blocks(blocks: np.ndarray) -> np.ndarray:
    """Entropy of the post-measurement state: pooled unnormalized block spectra."""
    w = _block_eigs(blocks)
    return _entropy_rows(w.reshape(*w.shape[:-2], -1))


def _joint_probs(blocks: np.ndarray, vecs_b: np.ndarray) -> np.ndarray:
    """<b_l| block_k |b_l> -> (..., k, l)."""
    return np.einsum(
        "...li,...kij,...lj->...kl", vecs_b.conj(), blocks, vecs_b, optimize=True
    ).real


# ---------------------------------------------------------------------------
# One-sided qubit optimization: grid plus compass refinement.

def _minimize_qubit_angles(objective, extra_starts=()):
    """Minimize objective(thetas, phis) over the Bloch sphere.

    Returns (theta, phi, value, evaluations, converged)."""
    th, ph = _qubit_grid()
    vals = np.asarray(objective(th, ph))
    k = int(np.argmin(vals))
    starts = [(th[k], ph[k])] + list(extra_starts)
    evals = vals.size
    best = (np.inf, 0.0, 0.0)
    converged = True
    for th0, ph0 in starts:
        res = compass_min(
            lambda xs: objective(xs[:, 0], xs[:, 1]),
            np.array([th0, ph0]),
            initial_step=np.pi / GRID_THETA,
            min_step=REFINE_MIN_STEP,
        )
        evals += res.evaluations
        converged = converged and res.converged
        if res.value < best[0]:
            best = (res.value, res.x[0], res.x[1])
    return best[1], best[2], best[0], evals, converged


def _basis_from_angles(theta: float, phi: float) -> np.ndarray:
    return _qubit_vectors(np.array([theta]), np.array([phi]))[0].T.copy()


# ---------------------------------------------------------------------------
# Discord with measurement on A.

@dataclass(frozen=True)
class DiscordResult:
    value: float
    basis_a: np.ndarray
    meta: OptMeta


def discord_A(state: BipartiteState) -> DiscordResult:
    """Quantum discord with the projective measurement on party A.

    Exact-mode (grid + refinement) for a qubit A; Givens-search heuristic
    otherwise.  The value is an upper bound on the true discord within the
    optimizer tolerance.
    """
    rho = state.mat
    d_a, d_b = state.d_a, state.d_b
    s_a = linalg.vn_entropy(state.rho_a())
    s_ab = linalg.vn_entropy(rho)
    rho_r = rho.reshape(d_a, d_b, d_a, d_b)
    if d_a == 2:

        def objective(th, ph):
            blocks = _a_blocks(rho_r, _qubit_vectors(th, ph))
            return _cond_entropy_from_blocks(blocks)

        th, ph, val, evals, conv = _minimize_qubit_angles(objective)
        basis = _basis_from_angles(th, ph)
        meta = OptMeta(converged=conv, evaluations=evals)
    else:
        param = GivensParametrization(d_a)
        anchor = linalg.herm_eig(state.rho_a()).eigenvectors

        def objective_p(xs):
            u = anchor @ param.build_batch(xs)
            blocks = np.einsum(
                "bak,bck,aicj->bkij", u.conj(), u, rho_r, optimize=True
            )
            return _cond_entropy_from_blocks(blocks)

        restarts = 8
        best = (np.inf, None)
        evals = 0
        conv = True
        for k in range(restarts):
            if k == 0:
                x0 = np.zeros(param.n_params)
            else:
                x0 = substream(771, k).uniform(0.0, np.pi, param.n_params)
            res = compass_min(
                objective_p, x0, initial_step=0.3, min_step=1e-6
            )
            evals += res.evaluations
            conv = conv and res.converged
            if res.value < best[0]:
                best = (res.value, res.x)
        val = best[0]
        basis = anchor @ param.build(best[1])
        meta = OptMeta(converged=conv, evaluations=evals, restarts=restarts, heuristic=True)
    value = _clip_measure(s_a - s_ab + val, "discord_A")
    return DiscordResult(value=value, basis_a=basis, meta=meta)


# ---------------------------------------------------------------------------
# B-side joint-entropy minimization given a fixed A-basis.

def _best_b_basis(state: BipartiteState, basis_a: np.ndarray):
    """Basis on B minimizing the entropy of the doubly measured state."""
    d_a, d_b = state.d_a, state.d_b
    rho_r = state.mat.reshape(d_a, d_b, d_a, d_b)
    blocks = _a_blocks(rho_r, basis_a.T)
    if d_b == 2:

        def objective(th, ph):
            p = _joint_probs(blocks, _qubit_vectors(th, ph))
            return _entropy_rows(p.reshape(*p.shape[:-2], -1))

        th, ph, val, evals, conv = _minimize_qubit_angles(objective)
        return _basis_from_angles(th, ph), float(val), OptMeta(conv, evals)

    param = GivensParametrization(d_b)

    def objective_p(xs):
        u = param.build_batch(xs)
        vecs = np.transpose(u, (0, 2, 1))  # (batch, outcome l, component)
        p = np.einsum("nli,kij,nlj->nkl", vecs.conj(), blocks, vecs, optimize=True).real
        return _entropy_rows(p.reshape(p.shape[0], -1))

    restarts = 8
    best = (np.inf, None)
    evals = 0
    conv = True
    for k in range(restarts):
        x0 = (
            np.zeros(param.n_params)
            if k == 0
            else substream(772, k).uniform(0.0, np.pi, param.n_params)
        )
        res = compass_min(objective_p, x0, initial_step=0.3, min_step=1e-6)
        evals += res.evaluations
        conv = conv and res.converged
        if res.value < best[0]:
            best = (res.value, res.x)
    return param.build(best[1]), float(best[0]), OptMeta(conv, evals, restarts, True)


@dataclass(frozen=True)
class Delta1Result:
    delta1: float
    discord_a: float
    basis_a: np.ndarray
    basis_b: np.ndarray
    meta: OptMeta


def delta1(state: BipartiteState, discord: DiscordResult | None = None) -> Delta1Result:
    """Coherence left in the total state beyond what the measured party keeps.

    The A-basis is the discord optimum; the B-basis minimizes the entropy of
    the doubly dephased state.  Both coherences are evaluated directly in the
    measurement product basis (no further basis optimization).
    """
    if discord is None:
        discord = discord_A(state)
    basis_a = discord.basis_a
    basis_b, _, meta_b = _best_b_basis(state, basis_a)
    product = linalg.kron(basis_a, basis_b)
    value = coherence_re(state.mat, product) - coherence_re(state.rho_a(), basis_a)
    meta = OptMeta(
        converged=discord.meta.converged and meta_b.converged,
        evaluations=discord.meta.evaluations + meta_b.evaluations,
        restarts=discord.meta.restarts,
        heuristic=discord.meta.heuristic or meta_b.heuristic,
    )
    return Delta1Result(
        delta1=_clip_measure(value, "delta1"),
        discord_a=discord.value,
        basis_a=basis_a,
        basis_b=basis_b,
        meta=meta,
    )


# ---------------------------------------------------------------------------
# Two-sided product-measurement optimization (two-qubit exact mode).

def _score_mutual_information(p: np.ndarray) -> np.ndarray:
    pa = p.sum(axis=-1)
    pb = p.sum(axis=-2)
    return (
        _entropy_rows(pa)
        + _entropy_rows(pb)
        - _entropy_rows(p.reshape(*p.shape[:-2], -1))
    )


def _score_joint_entropy(p: np.ndarray) -> np.ndarray:
    return _entropy_rows(p.reshape(*p.shape[:-2], -1))


def _optimize_product_measurement(rho: np.ndarray, score, maximize: bool, extra_seeds=()):
    """Optimize score(joint outcome probabilities) over two-qubit product bases.

    Coarse joint grid, per-side alternation on the full grid, then a joint
    compass refinement.  Returns (angles[4], value, evaluations, converged).
    """
    sign = 1.0 if maximize else -1.0
    r = rho.reshape(2, 2, 2, 2)
    thc, phc = _qubit_grid(16, 32)
    vc = _qubit_vectors(thc, phc)
    y = np.einsum("mli,mlj,aibj->abml", vc.conj(), vc, r, optimize=True)
    p = np.einsum("nka,nkb,abml->nmkl", vc.conj(), vc, y, optimize=True).real
    vals = score(p)
    evals = vals.size
    i, j = np.unravel_index(int(np.argmax(sign * vals)), vals.shape)
    seeds = [(thc[i], phc[i], thc[j], phc[j])] + list(extra_seeds)

    th_full, ph_full = _qubit_grid()
    v_full = _qubit_vectors(th_full, ph_full)
    best = (-np.inf, None)
    converged = True
    def objective(xs):
        va_ = _qubit_vectors(xs[:, 0], xs[:, 1])
        vb_ = _qubit_vectors(xs[:, 2], xs[:, 3])
        blk = np.einsum("nka,nkb,aibj->nkij", va_.conj(), va_, r, optimize=True)
        pj = np.einsum("nli,nkij,nlj->nkl", vb_.conj(), blk, vb_, optimize=True).real
        return sign * score(pj)

    for seed in seeds:
        tha, pha, thb, phb = (float(x) for x in seed)
        current = -np.inf
        for _ in range(8):
            vb = _qubit_vectors(np.array(thb), np.array(phb))
            yb = np.einsum("li,lj,aibj->abl", vb.conj(), vb, r, optimize=True)
            pa = np.einsum("nka,nkb,abl->nkl", v_full.conj(), v_full, yb, optimize=True).real
            va_vals = score(pa)
            evals += va_vals.size
            n = int(np.argmax(sign * va_vals))
            tha, pha = float(th_full[n]), float(ph_full[n])
            va = _qubit_vectors(np.array(tha), np.array(pha))
            ya = np.einsum("ka,kb,aibj->kij", va.conj(), va, r, optimize=True)
            pb = np.einsum("nli,kij,nlj->nkl", v_full.conj(), v_full, ya, optimize=True).real
            vb_vals = score(pb)
            evals += vb_vals.size
            m = int(np.argmax(sign * vb_vals))
            thb, phb = float(th_full[m]), float(ph_full[m])
            signed_new = sign * float(vb_vals[m])
            if signed_new - current <= 1e-13:
                break
            current = signed_new

        res = compass_max(
            objective,
            np.array([tha, pha, thb, phb]),
            initial_step=np.pi / GRID_THETA,
            min_step=REFINE_MIN_STEP,
        )
        evals += res.evaluations
        converged = converged and res.converged
        if res.value > best[0]:
            best = (res.value, res.x)
    value = sign * best[0]
    return best[1], float(value), evals, converged


@dataclass(frozen=True)
class SymmetricDiscordResult:
    value: float
    measurement: ProductMeasurement
    meta: OptMeta


def symmetric_discord(state: BipartiteState) -> SymmetricDiscordResult:
    """Mutual-information loss under the best two-sided product measurement."""
    if state.d_a != 2 or state.d_b != 2:
        raise DimensionMismatch("exact-mode symmetric discord requires two qubits")
    rho = state.mat
    i_rho = (
        linalg.vn_entropy(state.rho_a())
        + linalg.vn_entropy(state.rho_b())
        - linalg.vn_entropy(rho)
    )
    d_seed = discord_A(state)
    ta, fa = _angles_of_qubit_vector(d_seed.basis_a[:, 0])
    angles, best_mi, evals, conv = _optimize_product_measurement(
        rho, _score_mutual_information, maximize=True, extra_seeds=[(ta, fa, ta, fa)]
    )
    value = _clip_measure(i_rho - best_mi, "symmetric_discord")
    m = ProductMeasurement(
        _basis_from_angles(angles[0], angles[1]),
        _basis_from_angles(angles[2], angles[3]),
    )
    return SymmetricDiscordResult(value, m, OptMeta(conv, evals + d_seed.meta.evaluations))


@dataclass(frozen=True)
class Delta2Result:
    delta2: float
    residual_vs_ds: float
    symmetric_discord: float
    measurement: ProductMeasurement


def delta2_expression(state: BipartiteState, m: ProductMeasurement) -> float:
    """Total-state coherence minus both local coherences, all in the measurement bases."""
    product = linalg.kron(m.basis_a, m.basis_b)
    return (
        coherence_re(state.mat, product)
        - coherence_re(state.rho_a(), m.basis_a)
        - coherence_re(state.rho_b(), m.basis_b)
    )


def mutual_information_drop(state: BipartiteState, m: ProductMeasurement) -> float:
    """I(rho) - I(measured rho), computed through von Neumann entropies."""
    measured = measure_AB(state, m)
    i_rho = (
        linalg.vn_entropy(state.rho_a())
        + linalg.vn_entropy(state.rho_b())
        - linalg.vn_entropy(state.mat)
    )
    i_meas = (
        linalg.vn_entropy(measured.rho_a())
        + linalg.vn_entropy(measured.rho_b())
        - linalg.vn_entropy(measured.mat)
    )
    return i_rho - i_meas


def delta2(state: BipartiteState, sym: SymmetricDiscordResult | None = None) -> Delta2Result:
    """Coherence-discrepancy form of the symmetric discord at its optimum."""
    if sym is None:
        sym = symmetric_discord(state)
    value = delta2_expression(state, sym.measurement)
    return Delta2Result(
        delta2=_clip_measure(value, "delta2"),
        residual_vs_ds=abs(value - sym.value),
        symmetric_discord=sym.value,
        measurement=sym.measurement,
    )


# ---------------------------------------------------------------------------
# Measurement-induced disturbance and nonlocality, deficits.

@dataclass(frozen=True)
class MidResult:
    value: float
    degenerate_marginal: bool


def mid(state: BipartiteState) -> MidResult:
    """Entropy cost of measuring both parties in their local eigenbases.

    Degenerate marginals are flagged; the deterministic tie-broken eigenbasis
    is used regardless.
    """
    ea = linalg.herm_eig(state.rho_a())
    eb = linalg.herm_eig(state.rho_b())
    degenerate = any(
        len(c) > 1
        for eig in (ea, eb)
        for c in linalg.degenerate_clusters(eig.eigenvalues)
    )
    basis = linalg.kron(ea.eigenvectors, eb.eigenvectors)
    value = _clip_measure(coherence_re(state.mat, basis), "mid")
    return MidResult(value=value, degenerate_marginal=degenerate)


@dataclass(frozen=True)
class MinVnResult:
    value: float | None
    coherence_bound: float | None
    degenerate_marginal: bool


def min_vn(state: BipartiteState) -> MinVnResult:
    """Entropic measurement-induced nonlocality for a nondegenerate A-marginal.

    The only locally invariant rank-1 projective measurement is then the
    eigenbasis of the A-marginal.  Returns absent values when the marginal is
    degenerate (the invariant-measurement manifold is nontrivial there).
    """
    ea = linalg.herm_eig(state.rho_a())
    if any(len(c) > 1 for c in linalg.degenerate_clusters(ea.eigenvalues)):
        return MinVnResult(None, None, True)
    basis_a = ea.eigenvectors
    measured = measure_A(state, basis_a)
    value = _clip_measure(
        linalg.vn_entropy(measured.mat) - linalg.vn_entropy(state.mat), "min_vn"
    )
    basis_b, _, _ = _best_b_basis(state, basis_a)
    bound = coherence_re(state.mat, linalg.kron(basis_a, basis_b))
    return MinVnResult(value=value, coherence_bound=float(bound), degenerate_marginal=False)


@dataclass(frozen=True)
class DeficitsResult:
    zero_way: float
    one_way: float
    measurement: ProductMeasurement
    basis_a_one_way: np.ndarray
    meta: OptMeta


def deficits(state: BipartiteState) -> DeficitsResult:
    """Minimal entropy production under two-sided and one-sided measurements.

    The one-way optimum seeds the two-way search and vice versa, so the
    computed one-way value never exceeds the two-way value.
    """
    if state.d_a != 2 or state.d_b != 2:
        raise DimensionMismatch("exact-mode deficits require two qubits")
    rho = state.mat
    s_ab = linalg.vn_entropy(rho)
    rho_r = rho.reshape(2, 2, 2, 2)

    def spb_objective(th, ph):
        blocks = _a_blocks(rho_r, _qubit_vectors(th, ph))
        return _pooled_entropy_from_blocks(blocks)

    th1, ph1, spb_min, ev1, conv1 = _minimize_qubit_angles(spb_objective)
    angles, joint_min, ev2, conv2 = _optimize_product_measurement(
        rho, _score_joint_entropy, maximize=False, extra_seeds=[(th1, ph1, th1, ph1)]
    )
    # fold the two-way A-basis back into the one-way minimum
    spb_at_zero = float(
        spb_objective(np.array([angles[0]]), np.array([angles[1]]))[0]
    )
    spb_min = min(spb_min, spb_at_zero)
    m = ProductMeasurement(
        _basis_from_angles(angles[0], angles[1]),
        _basis_from_angles(angles[2], angles[3]),
    )
    return DeficitsResult(
        zero_way=_clip_measure(joint_min - s_ab, "zero_way_deficit"),
        one_way=_clip_measure(spb_min - s_ab, "one_way_deficit"),
        measurement=m,
        basis_a_one_way=_basis_from_angles(th1, ph1),
        meta=OptMeta(converged=conv1 and conv2, evaluations=ev1 + ev2),
    )


# ---------------------------------------------------------------------------
# Entanglement of formation (two qubits) and the consistency checks.

def concurrence(state: BipartiteState) -> float:
    """Wootters concurrence of a two-qubit state."""
    if state.d_a != 2 or state.d_b != 2:
        raise DimensionMismatch("concurrence is defined here for two qubits only")
    rho = state.mat
    yy = linalg.kron(PAULI_Y, PAULI_Y)
    rho_tilde = yy @ rho.conj() @ yy
    es = linalg.herm_eig(rho)
    sqrt_rho = (es.eigenvectors * np.sqrt(np.clip(es.eigenvalues, 0.0, None))) @ linalg.dagger(
        es.eigenvectors
    )
    h = sqrt_rho @ rho_tilde @ sqrt_rho
    h = (h + linalg.dagger(h)) / 2.0
    mu = np.sqrt(np.clip(linalg.herm_eig(h).eigenvalues, 0.0, None))[::-1]
    c = mu[0] - mu[1] - mu[2] - mu[3]
    return 0.0 if c < MEASURE_CLIP else float(c)


def _binary_entropy(x: float) -> float:
    total = 0.0
    for t in (x, 1.0 - x):
        if t > linalg.EIG_ZERO:
            total -= t * np.log2(t)
    return total


def eof_2x2(state: BipartiteState) -> float:
    """Entanglement of formation from the concurrence closed form."""
    c = concurrence(state)
    return _binary_entropy((1.0 + np.sqrt(1.0 - c * c)) / 2.0)


def conditional_entropy_BA(state: BipartiteState) -> float:
    """S(B|A) = S(rho_AB) - S(rho_A), in bits."""
    return linalg.vn_entropy(state.mat) - linalg.vn_entropy(state.rho_a())


@dataclass(frozen=True)
class Eq15Result:
    eof: float
    delta1: float
    applicable: bool
    satisfied: bool | None


def eof_delta1_check(state: BipartiteState) -> Eq15Result:
    """Entanglement of formation against the coherence discrepancy bound.

    Applicable when S(B|A) is nonnegative or when the subadditivity equality
    S(rho_AB) = |S(rho_A) - S(rho_B)| holds; outside that regime the bound is
    not claimed and ``satisfied`` is None.
    """
    if state.d_a != 2 or state.d_b != 2:
        raise DimensionMismatch("the entanglement bound check requires two qubits")
    s_ab = linalg.vn_entropy(state.mat)
    s_a = linalg.vn_entropy(state.rho_a())
    s_b = linalg.vn_entropy(state.rho_b())
    applicable = (s_ab - s_a >= -MEASURE_CLIP) or (
        abs(s_ab - abs(s_a - s_b)) <= MEASURE_CLIP
    )
    e = eof_2x2(state)
    d1 = delta1(state).delta1
    satisfied = bool(e <= d1 + 1e-6) if applicable else None
    return Eq15Result(eof=e, delta1=d1, applicable=applicable, satisfied=satisfied)


@dataclass(frozen=True)
class KoashiWinterResult:
    lhs: float
    rhs: float
    residual: float


def koashi_winter_check(psi) -> KoashiWinterResult:
    """D_A(rho_AB) + S(B|A) against E_f(rho_BC) for a pure three-qubit state."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.ndim == 1:
        if psi.shape != (8,):
            raise DimensionMismatch("expected a vector on 2x2x2")
        psi = psi / np.linalg.norm(psi)
        rho = np.outer(psi, psi.conj())
    elif psi.shape == (8, 8):
        purity = float(np.trace(psi @ psi).real)
        if abs(purity - 1.0) > 1e-9:
            raise NotPure(f"purity {purity} differs from 1")
        rho = psi
    else:
        raise DimensionMismatch(f"expected dim-8 pure state, got shape {psi.shape}")
    r = rho.reshape(2, 2, 2, 2, 2, 2)
    rho_ab = np.einsum("abcdec->abde", r).reshape(4, 4)
    rho_bc = np.einsum("abcaef->bcef", r).reshape(4, 4)
    st_ab = BipartiteState(rho_ab, 2, 2)
    lhs = discord_A(st_ab).value + conditional_entropy_BA(st_ab)
    rhs = eof_2x2(BipartiteState(rho_bc, 2, 2))
    return KoashiWinterResult(lhs=float(lhs), rhs=float(rhs), residual=abs(lhs - rhs))


# ---------------------------------------------------------------------------
# Full report.

@dataclass(frozen=True)
class CorrelationReport:
    discord_a: float
    symmetric_discord: float | None
    delta1: float
    delta2: float | None
    mid: float
    mid_degenerate: bool
    min_vn: float | None
    min_vn_bound: float | None
    zero_way_deficit: float | None
    one_way_deficit: float | None
    eof: float | None
    cond_entropy_ba: float
    meta: dict = field(default_factory=dict)


def correlation_report(state: BipartiteState) -> CorrelationReport:
    """Compute every applicable correlation measure for a bipartite state.

    Two-sided quantities (symmetric discord, deficits) and the entanglement
    of formation are exact-mode only and reported as None off two qubits.
    """
    two_qubit = (state.d_a, state.d_b) == (2, 2)
    dres = discord_A(state)
    d1 = delta1(state, discord=dres)
    m = mid(state)
    nv = min_vn(state)
    meta = {"discord_a": dres.meta, "delta1": d1.meta}
    sym = d2 = df = None
    if two_qubit:
        sym = symmetric_discord(state)
        d2 = delta2(state, sym=sym)
        df = deficits(state)
        meta["symmetric_discord"] = sym.meta
        meta["deficits"] = df.meta
        meta["delta2_residual_vs_ds"] = d2.residual_vs_ds
    return CorrelationReport(
        discord_a=dres.value,
        symmetric_discord=sym.value if sym else None,
        delta1=d1.delta1,
        delta2=d2.delta2 if d2 else None,
        mid=m.value,
        mid_degenerate=m.degenerate_marginal,
        min_vn=nv.value,
        min_vn_bound=nv.coherence_bound,
        zero_way_deficit=df.zero_way if df else None,
        one_way_deficit=df.one_way if df else None,
        eof=eof_2x2(state) if two_qubit else None,
        cond_entropy_ba=conditional_entropy_BA(state),
        meta=meta,
    )
