"""Single-qubit Kraus channels and their application to n-qubit states.

Channel strength is parametrized as gamma(t) = 1 - exp(-t) so that `evolve`
can sweep unbounded physical time; the dephasing convention makes the
off-diagonal element of a qubit decay exactly as exp(-t).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .coherence import rqc
from .errors import DimensionMismatch, UnknownChannel

_I2 = np.eye(2, dtype=np.complex128)
_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
_Y = np.array([[0.0, -1j], [1j, 0.0]], dtype=np.complex128)

COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True)
class KrausChannel:
    kraus_ops: tuple
    label: str

    def __post_init__(self):
        d = self.kraus_ops[0].shape[0]
        total = sum(linalg.dagger(k) @ k for k in self.kraus_ops)
        if np.abs(total - np.eye(d)).max() > COMPLETENESS_TOL:
            raise DimensionMismatch(
                f"Kraus operators of {self.label!r} do not satisfy completeness"
            )

    @property
    def dim(self) -> int:
        return self.kraus_ops[0].shape[0]


def dephasing(gamma: float) -> KrausChannel:
    return KrausChannel(
        (np.sqrt(1.0 - gamma / 2.0) * _I2, np.sqrt(gamma / 2.0) * _Z), "dephasing"
    )


def amplitude_damping(gamma: float) -> KrausChannel:
    k0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - gamma)]], dtype=np.complex128)
    k1 = np.array([[0.0, np.sqrt(gamma)], [0.0, 0.0]], dtype=np.complex128)
    return KrausChannel((k0, k1), "amplitude_damping")


def depolarizing(gamma: float) -> KrausChannel:
    return KrausChannel(
        (
            np.sqrt(1.0 - 3.0 * gamma / 4.0) * _I2,
            np.sqrt(gamma / 4.0) * _X,
            np.sqrt(gamma / 4.0) * _Y,
            np.sqrt(gamma / 4.0) * _Z,
        ),
        "depolarizing",
    )


CHANNELS = {
    "dephasing": dephasing,
    "amplitude_damping": amplitude_damping,
    "depolarizing": depolarizing,
}


def channel(name: str, gamma: float) -> KrausChannel:
    try:
        factory = CHANNELS[name]
    except KeyError:
        raise UnknownChannel(
            f"unknown channel {name!r}; choose from {sorted(CHANNELS)}"
        ) from None
    return factory(gamma)


def apply_per_qubit(chan: KrausChannel, rho: np.ndarray) -> np.ndarray:
    """Apply a single-qubit channel independently to every qubit of the state."""
    d = rho.shape[0]
    n = int(round(np.log2(d)))
    if 2**n != d:
        raise DimensionMismatch(f"dimension {d} is not a power of two")
    out = rho.astype(np.complex128, copy=True)
    for qubit in range(n):
        left = np.eye(2**qubit, dtype=np.complex128)
        right = np.eye(2 ** (n - qubit - 1), dtype=np.complex128)
        acc = np.zeros_like(out)
        for k in chan.kraus_ops:
            op = linalg.kron(linalg.kron(left, k), right)
            acc += op @ out @ linalg.dagger(op)
        out = acc
    return out


def gamma_profile_default(t: float) -> float:
    return 1.0 - np.exp(-t)


def evolve(
    rho0: np.ndarray,
    channel_name: str,
    steps: int,
    t_max: float,
    restarts: int = 8,
) -> list[dict]:
    """Track both coherence measures and the l1 incompatibility of the evolved
    state relative to the initial one.

    Emits steps+1 rows from t=0 to t_max; a degenerate initial state routes
    the coherence through the eigenbasis-supremum branch and is flagged.
    """
    from .incompat import q_l1  # local import to avoid a cycle at module load

    if steps < 1:
        raise DimensionMismatch("steps must be >= 1")
    rows = []
    for t in np.linspace(0.0, t_max, steps + 1):
        chan = channel(channel_name, gamma_profile_default(float(t)))
        rho_t = apply_per_qubit(chan, rho0)
        r_l1 = rqc(rho_t, rho0, "l1", restarts=restarts)
        r_re = rqc(rho_t, rho0, "re", restarts=restarts)
        inc = q_l1(rho_t, rho0)
        rows.append(
            {
                "t": float(t),
                "gamma": gamma_profile_default(float(t)),
                "c_l1": r_l1.value,
                "c_re": r_re.value,
                "q_l1": inc.q_l1,
                "sigma_degenerate": bool(r_l1.degenerate_sigma),
            }
        )
    return rows
