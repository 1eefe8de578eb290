"""JSON state dumps.

A dump is one JSON object::

    {
      "n_modes": 1,
      "mean": [0.0, 0.0],
      "cov": [0.5, 0.0, 0.0, 0.5],
      "metadata": {"convention": "...", "rng": "...", "seed": null}
    }

``cov`` is row-major. Floats are written with Python's shortest round-trip
representation, so parsing a dump and writing it again reproduces the same
bytes.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .core import CONVENTION, GaussianError, GaussianState


class SchemaError(GaussianError):
    """A file does not match the expected structure.

    ``locus`` names the offending field (``"cov[3]"``, ``"ops[2].eta"``) or,
    for syntax errors, the line and column.
    """

    def __init__(self, locus: str, message: str, source: str | None = None):
        self.locus = locus
        self.source = source
        where = f"{source}: " if source else ""
        super().__init__(f"{where}{locus}: {message}")


def load_json(text: str, source: str | None = None):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno}, column {exc.colno}", exc.msg, source) from None


def read_json_file(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SchemaError("file", str(exc), str(path)) from None
    return load_json(text, str(path))


def _number(value, locus: str, source: str | None) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise SchemaError(locus, f"expected a finite number, got {value!r}", source)
    return float(value)


def default_metadata(rng: str | None = None, seed: int | None = None) -> dict:
    return {"convention": CONVENTION, "rng": rng, "seed": seed}


def state_to_dict(state: GaussianState, metadata: dict | None = None) -> dict:
    return {
        "n_modes": state.n_modes,
        "mean": [float(v) for v in state.mean],
        "cov": [float(v) for v in state.cov.ravel()],
        "metadata": default_metadata() if metadata is None else metadata,
    }


def dumps_state(state: GaussianState, metadata: dict | None = None) -> str:
    return json.dumps(state_to_dict(state, metadata), indent=2) + "\n"


def state_from_dict(obj, source: str | None = None) -> tuple[GaussianState, dict]:
    """Parse a dump object; returns the state and its metadata dict."""
    if not isinstance(obj, dict):
        raise SchemaError("<root>", "expected a JSON object", source)
    for key in ("n_modes", "mean", "cov"):
        if key not in obj:
            raise SchemaError(key, "missing required field", source)
    n = obj["n_modes"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SchemaError("n_modes", f"expected a positive integer, got {n!r}", source)
    mean, cov = obj["mean"], obj["cov"]
    if not isinstance(mean, list) or len(mean) != 2 * n:
        raise SchemaError("mean", f"expected a list of {2 * n} numbers", source)
    if not isinstance(cov, list) or len(cov) != 4 * n * n:
        raise SchemaError("cov", f"expected a row-major list of {4 * n * n} numbers", source)
    mean = [_number(v, f"mean[{i}]", source) for i, v in enumerate(mean)]
    cov = [_number(v, f"cov[{i}]", source) for i, v in enumerate(cov)]
    metadata = obj.get("metadata", default_metadata())
    if not isinstance(metadata, dict):
        raise SchemaError("metadata", "expected a JSON object", source)
    unknown = sorted(set(obj) - {"n_modes", "mean", "cov", "metadata"})
    if unknown:
        raise SchemaError(unknown[0], "unknown field", source)
    try:
        state = GaussianState(np.array(mean), np.array(cov).reshape(2 * n, 2 * n))
    except GaussianError as exc:
        raise SchemaError("cov", str(exc), source) from None
    return state, metadata


def loads_state(text: str, source: str | None = None) -> tuple[GaussianState, dict]:
    return state_from_dict(load_json(text, source), source)


def read_state(path) -> tuple[GaussianState, dict]:
    return state_from_dict(read_json_file(path), str(path))


def write_state(path, state: GaussianState, metadata: dict | None = None) -> None:
    Path(path).write_text(dumps_state(state, metadata))
