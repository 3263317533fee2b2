"""JSON state files shared by the library and the CLI.

Schema: {"dim": d, "d_a": optional, "d_b": optional, "re": [[...]], "im": [[...]]}
with row-major real and imaginary parts.  Loading validates the schema
(ParseError naming the offending field) and the physical constraints
(Hermitian, unit trace, positive).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import states
from .errors import ParseError


def _as_matrix(payload: dict, key: str, dim: int) -> np.ndarray:
    rows = payload.get(key)
    if rows is None:
        raise ParseError(f"missing field {key!r}")
    arr = np.asarray(rows, dtype=float)
    if arr.shape != (dim, dim):
        raise ParseError(f"field {key!r} must be a {dim}x{dim} array, got {arr.shape}")
    return arr


def load_state(path) -> tuple[np.ndarray, int | None, int | None]:
    """Returns (validated density matrix, d_a or None, d_b or None)."""
    try:
        payload = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise ParseError("state file must contain a JSON object")
    dim = payload.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("field 'dim' must be a positive integer")
    mat = _as_matrix(payload, "re", dim) + 1j * _as_matrix(payload, "im", dim)
    d_a = payload.get("d_a")
    d_b = payload.get("d_b")
    for name, value in (("d_a", d_a), ("d_b", d_b)):
        if value is not None and (not isinstance(value, int) or value < 1):
            raise ParseError(f"field {name!r} must be a positive integer")
    if (d_a is None) != (d_b is None):
        raise ParseError("fields 'd_a' and 'd_b' must be given together")
    if d_a is not None and d_a * d_b != dim:
        raise ParseError(f"d_a * d_b = {d_a * d_b} does not match dim = {dim}")
    return states.validate(mat), d_a, d_b


def save_state(path, mat: np.ndarray, d_a: int | None = None, d_b: int | None = None) -> None:
    payload: dict = {
        "dim": int(mat.shape[0]),
        "re": mat.real.tolist(),
        "im": mat.imag.tolist(),
    }
    if d_a is not None:
        payload["d_a"] = int(d_a)
        payload["d_b"] = int(d_b)
    Path(path).write_text(json.dumps(payload))


def state_to_payload(mat: np.ndarray, d_a: int | None = None, d_b: int | None = None) -> dict:
    payload: dict = {
        "dim": int(mat.shape[0]),
        "re": mat.real.tolist(),
        "im": mat.imag.tolist(),
    }
    if d_a is not None:
        payload["d_a"] = int(d_a)
        payload["d_b"] = int(d_b)
    return payload
