"""Relative quantum coherence, state incompatibility, and quantum correlations.

The library computes one state's coherence in another state's eigenbasis
(in l1-norm and relative-entropy form), commutator-based incompatibility
measures, and the discord family of two-qubit correlation measures, plus the
identities and inequalities tying them together.  The `rqckit` CLI exposes
per-state reports, randomized verification sweeps, channel evolution, and
the full acceptance suite.
"""

__version__ = "0.1.0"

from .coherence import (
    coherence_l1,
    coherence_re,
    max_rqc_mm_l1,
    max_rqc_mm_re,
    max_rqc_numeric,
    mub_complementarity,
    rqc,
)
from .correlations import (
    ProductMeasurement,
    concurrence,
    conditional_entropy_BA,
    correlation_report,
    deficits,
    delta1,
    delta2,
    discord_A,
    eof_2x2,
    eof_delta1_check,
    koashi_winter_check,
    measure_A,
    measure_AB,
    mid,
    min_vn,
    symmetric_discord,
)
from .incompat import commutator, extremal_state, q_frobenius, q_l1, sum_rule_check
from .linalg import herm_eig, kron, partial_trace, purify, vn_entropy
from .states import (
    BipartiteState,
    bell_state,
    bloch_coords,
    gell_mann_basis,
    maximally_mixed,
    mub_set,
    named_state,
    quantum_classical_state,
    random_density,
    random_pure,
    random_unitary,
    validate,
    werner_state,
)

__all__ = [name for name in dir() if not name.startswith("_")]
