"""Compass search and a Givens-rotation parametrization of unitaries.

The compass search polls all +/- coordinate directions in one batched
objective call, doubles the step on success (capped at the initial step),
and halves it on failure until the step drops below ``min_step``.  It is
deterministic for a deterministic objective.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SearchResult:
    x: np.ndarray
    value: float
    evaluations: int
    converged: bool


def compass_max(
    f,
    x0: np.ndarray,
    *,
    initial_step: float,
    min_step: float,
    min_gain: float = 1e-12,
    max_polls: int = 20_000,
) -> SearchResult:
    """Maximize ``f`` by coordinate pattern search.

    ``f`` must accept a batch of parameter vectors of shape (m, n) and return
    m values.  A move is accepted only when it gains more than ``min_gain``,
    which keeps rounding noise from driving endless sub-epsilon walks.
    """
    x = np.asarray(x0, dtype=float).copy()
    n = x.size
    fx = float(f(x[None, :])[0])
    evals = 1
    step = initial_step
    polls = 0
    idx = np.arange(n)
    while step >= min_step and polls < max_polls:
        cand = np.repeat(x[None, :], 2 * n, axis=0)
        cand[idx, idx] += step
        cand[n + idx, idx] -= step
        vals = np.asarray(f(cand), dtype=float)
        evals += 2 * n
        polls += 1
        k = int(np.argmax(vals))
        if vals[k] > fx + min_gain:
            x = cand[k].copy()
            fx = float(vals[k])
            step = min(step * 2.0, initial_step)
        else:
            step *= 0.5
    return SearchResult(x=x, value=fx, evaluations=evals, converged=step < min_step)


def compass_min(f, x0, **kw) -> SearchResult:
    res = compass_max(lambda xs: -np.asarray(f(xs)), x0, **kw)
    return SearchResult(res.x, -res.value, res.evaluations, res.converged)


class GivensParametrization:
    """U(d) as a product of two-level rotations, optionally with column phases.

    The parameter vector is [theta_1..theta_m, phi_1..phi_m(, psi_1..psi_d)]
    where m = len(pairs); each (theta, phi) drives the rotation
    [[cos t, sin t e^{i phi}], [-sin t e^{-i phi}, cos t]] on its index pair
    and the psi are diagonal column phases.  With all index pairs and phases
    this covers U(d); restricting the pairs to index blocks yields
    block-diagonal unitaries.  Column phases never change the basis projectors
    |u_k><u_k|, so objectives defined on bases should search with
    ``with_phases=False`` (the default) and skip those flat directions.
    """

    def __init__(self, dim: int, pairs=None, with_phases: bool = False):
        self.dim = dim
        if pairs is None:
            pairs = [(p, q) for p in range(dim - 1) for q in range(p + 1, dim)]
        self.pairs = tuple(tuple(pq) for pq in pairs)
        self.with_phases = with_phases

    @property
    def n_params(self) -> int:
        return 2 * len(self.pairs) + (self.dim if self.with_phases else 0)

    def build_batch(self, params: np.ndarray) -> np.ndarray:
        params = np.atleast_2d(np.asarray(params, dtype=float))
        b = params.shape[0]
        d = self.dim
        m = len(self.pairs)
        thetas = params[:, :m]
        phis = params[:, m : 2 * m]
        u = np.broadcast_to(np.eye(d, dtype=np.complex128), (b, d, d)).copy()
        for k, (p, q) in enumerate(self.pairs):
            c = np.cos(thetas[:, k])[:, None]
            s = np.sin(thetas[:, k])[:, None]
            e = np.exp(1j * phis[:, k])[:, None]
            up = u[:, :, p].copy()
            uq = u[:, :, q].copy()
            u[:, :, p] = c * up - (s * e.conj()) * uq
            u[:, :, q] = (s * e) * up + c * uq
        if self.with_phases:
            u *= np.exp(1j * params[:, 2 * m :])[:, None, :]
        return u

    def build(self, params: np.ndarray) -> np.ndarray:
        return self.build_batch(params)[0]
