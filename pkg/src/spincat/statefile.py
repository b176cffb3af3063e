"""Versioned JSON serialization for spin and two-mode states.

Amplitudes are stored as [re, im] pairs in the package's canonical orders
(m = -j..+j ascending, or n_a = 0..N ascending).  Floats go through
Python's shortest round-trip repr, so save -> load is bit-exact.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import StateFileError
from .halfint import HalfInteger
from .schwinger import TwoModeState
from .su2 import SpinState

SPIN_SCHEMA = "spin-state/1"
TWO_MODE_SCHEMA = "two-mode-state/1"
_LOAD_NORM_TOL = 1e-9


def _amplitude_pairs(amps: np.ndarray) -> list[list[float]]:
    return [[float(a.real), float(a.imag)] for a in amps]


def save_state(state, path, metadata: dict | None = None):
    """Write a SpinState or TwoModeState as schema-versioned JSON."""
    if isinstance(state, SpinState):
        doc = {"schema_version": SPIN_SCHEMA, "twice_j": state.j.twice_value}
    elif isinstance(state, TwoModeState):
        doc = {"schema_version": TWO_MODE_SCHEMA, "n_total": state.n_total}
    else:
        raise TypeError(f"cannot serialize {type(state).__name__}")
    doc["amplitudes"] = _amplitude_pairs(state.amplitudes)
    doc["metadata"] = {str(k): str(v) for k, v in (metadata or {}).items()}
    Path(path).write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


def _parse_amplitudes(doc, expected_len: int) -> np.ndarray:
    pairs = doc.get("amplitudes")
    if not isinstance(pairs, list) or len(pairs) != expected_len:
        raise StateFileError(
            f"expected {expected_len} amplitude pairs, got "
            f"{len(pairs) if isinstance(pairs, list) else type(pairs).__name__}"
        )
    try:
        arr = np.array([complex(float(re), float(im)) for re, im in pairs], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise StateFileError(f"malformed amplitude entry: {exc}") from exc
    if not np.all(np.isfinite(arr)):
        raise StateFileError("non-finite amplitude")
    nrm = float(np.linalg.norm(arr))
    if not math.isfinite(nrm) or abs(nrm - 1.0) > _LOAD_NORM_TOL:
        raise StateFileError(f"declared state has norm {nrm}, not 1 within {_LOAD_NORM_TOL}")
    return arr


def load_state(path):
    """Read a state file; returns a SpinState or TwoModeState."""
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise StateFileError("top-level JSON value must be an object")

    schema = doc.get("schema_version")
    if schema == SPIN_SCHEMA:
        twice_j = doc.get("twice_j")
        if not isinstance(twice_j, int) or twice_j < 0:
            raise StateFileError(f"bad twice_j: {twice_j!r}")
        return SpinState(HalfInteger(twice_j), _parse_amplitudes(doc, twice_j + 1))
    if schema == TWO_MODE_SCHEMA:
        n_total = doc.get("n_total")
        if not isinstance(n_total, int) or n_total < 0:
            raise StateFileError(f"bad n_total: {n_total!r}")
        return TwoModeState(n_total, _parse_amplitudes(doc, n_total + 1))
    raise StateFileError(f"unknown schema_version: {schema!r}")


def load_spin_state(path) -> SpinState:
    state = load_state(path)
    if not isinstance(state, SpinState):
        raise StateFileError(f"{path} holds a {TWO_MODE_SCHEMA} state, need {SPIN_SCHEMA}")
    return state


def load_two_mode_state(path) -> TwoModeState:
    state = load_state(path)
    if not isinstance(state, TwoModeState):
        raise StateFileError(f"{path} holds a {SPIN_SCHEMA} state, need {TWO_MODE_SCHEMA}")
    return state
