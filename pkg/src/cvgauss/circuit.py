"""Declarative circuits: initial states, gates, then homodyne measurements.

Circuit files are JSON objects, for example::

    {
      "modes": 3,
      "initial": ["vacuum", {"type": "tmsv", "r": 0.5}],
      "ops": [
        {"type": "beamsplitter", "modes": [0, 1], "eta": 0.5},
        {"type": "phase", "mode": 2, "phi": 0.3}
      ],
      "measurements": [
        {"mode": 2, "phi": 0.0, "outcome": 0.4},
        {"mode": 0, "phi": 1.5708}
      ]
    }

Initial entries fill mode slots in order; ``tmsv`` takes two consecutive
slots. Each measurement removes its mode, and later records index the
remaining modes: in the example above the second record's ``mode: 0`` is the
original mode 0, while ``mode: 1`` would have been the original mode 1 and
``mode: 2`` would be out of range.

Measurements with an ``outcome`` are conditioned on it. Otherwise the
outcome is sampled with the record's own ``seed`` if given, or with
:func:`record_seed` applied to the run's master seed and the record index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import states, unitaries
from .core import GaussianState
from .measurement import (
    RNG_NAME,
    homodyne_condition,
    homodyne_distribution,
    sample_homodyne,
)
from .serialization import SchemaError, _number, default_metadata

INITIAL_PARAMS = {
    "vacuum": {},
    "coherent": {"re": 0.0, "im": 0.0},
    "thermal": {"nbar": None},
    "squeezed": {"r": None, "theta": 0.0},
    "tmsv": {"r": None, "theta": 0.0},
}
GATE_PARAMS = {
    "displace": {"mode": None, "re": 0.0, "im": 0.0},
    "phase": {"mode": None, "phi": None},
    "beamsplitter": {"modes": None, "eta": None},
    "squeeze": {"mode": None, "r": None, "theta": 0.0},
    "tmsqueeze": {"modes": None, "r": None, "theta": 0.0},
}
MEASUREMENT_PARAMS = {"mode": None, "phi": 0.0, "outcome": None, "seed": None}


@dataclass(frozen=True)
class CircuitSpec:
    modes: int
    initial: tuple[dict, ...]
    ops: tuple[dict, ...] = ()
    measurements: tuple[dict, ...] = field(default=())


@dataclass(frozen=True)
class MeasurementRecord:
    record: int
    mode: int
    phi: float
    outcome: float
    dist_mean: float
    dist_var: float
    seed: int | None

    def as_dict(self) -> dict:
        return {
            "record": self.record,
            "mode": self.mode,
            "phi": self.phi,
            "outcome": self.outcome,
            "dist_mean": self.dist_mean,
            "dist_var": self.dist_var,
            "seed": self.seed,
        }


def record_seed(master_seed: int, index: int) -> int:
    """64-bit seed for measurement record ``index``.

    Mixes ``(master_seed, index)`` through :class:`numpy.random.SeedSequence`
    with the index as spawn key, so a record's seed depends only on its own
    position and the master seed.
    """
    ss = np.random.SeedSequence(int(master_seed), spawn_key=(int(index),))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _integer(value, locus, source, lo=0, hi=None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(locus, f"expected an integer, got {value!r}", source)
    if value < lo or (hi is not None and value >= hi):
        rng = f"[{lo}, {hi})" if hi is not None else f">= {lo}"
        raise SchemaError(locus, f"value {value} out of range {rng}", source)
    return value


def _fields(entry, table: dict, locus: str, source, kind_key: str | None = "type") -> dict:
    if kind_key is None:
        spec = table
        kind = None
    else:
        if isinstance(entry, str):
            entry = {kind_key: entry}
        if not isinstance(entry, dict):
            raise SchemaError(locus, "expected an object or a type name", source)
        kind = entry.get(kind_key)
        if kind not in table:
            raise SchemaError(f"{locus}.{kind_key}", f"unknown type {kind!r}; expected one of {sorted(table)}", source)
        spec = table[kind]
    if not isinstance(entry, dict):
        raise SchemaError(locus, "expected an object", source)
    out = {} if kind is None else {kind_key: kind}
    for key in entry:
        if key != kind_key and key not in spec:
            raise SchemaError(f"{locus}.{key}", "unknown field", source)
    for key, default in spec.items():
        if key in entry:
            out[key] = entry[key]
        elif default is None and key not in ("outcome", "seed"):
            raise SchemaError(f"{locus}.{key}", "missing required field", source)
        else:
            out[key] = default
    return out


def parse_circuit(obj, source: str | None = None) -> CircuitSpec:
    """Validate a decoded circuit file; raises :class:`SchemaError` with a field locus."""
    if not isinstance(obj, dict):
        raise SchemaError("<root>", "expected a JSON object", source)
    for key in obj:
        if key not in ("modes", "initial", "ops", "measurements"):
            raise SchemaError(key, "unknown field", source)
    if "modes" not in obj:
        raise SchemaError("modes", "missing required field", source)
    modes = _integer(obj["modes"], "modes", source, lo=1)

    raw_initial = obj.get("initial")
    if not isinstance(raw_initial, list) or not raw_initial:
        raise SchemaError("initial", "expected a non-empty list", source)
    initial, slots = [], 0
    for i, entry in enumerate(raw_initial):
        loc = f"initial[{i}]"
        rec = _fields(entry, INITIAL_PARAMS, loc, source)
        for key in rec:
            if key != "type":
                rec[key] = _number(rec[key], f"{loc}.{key}", source)
        if rec["type"] == "thermal" and rec["nbar"] < 0:
            raise SchemaError(f"{loc}.nbar", "must be non-negative", source)
        initial.append(rec)
        slots += 2 if rec["type"] == "tmsv" else 1
    if slots != modes:
        raise SchemaError("initial", f"initial states fill {slots} mode slots but modes is {modes}", source)

    raw_ops = obj.get("ops", [])
    if not isinstance(raw_ops, list):
        raise SchemaError("ops", "expected a list", source)
    ops = []
    for i, entry in enumerate(raw_ops):
        loc = f"ops[{i}]"
        rec = _fields(entry, GATE_PARAMS, loc, source)
        for key in rec:
            if key == "mode":
                rec[key] = _integer(rec[key], f"{loc}.mode", source, hi=modes)
            elif key == "modes":
                pair = rec[key]
                if not isinstance(pair, list) or len(pair) != 2:
                    raise SchemaError(f"{loc}.modes", "expected a list of two mode indices", source)
                pair = [_integer(m, f"{loc}.modes[{j}]", source, hi=modes) for j, m in enumerate(pair)]
                if pair[0] == pair[1]:
                    raise SchemaError(f"{loc}.modes", "mode indices must differ", source)
                rec[key] = pair
            elif key != "type":
                rec[key] = _number(rec[key], f"{loc}.{key}", source)
        if rec["type"] == "beamsplitter" and not 0.0 <= rec["eta"] <= 1.0:
            raise SchemaError(f"{loc}.eta", "transmittivity must lie in [0, 1]", source)
        ops.append(rec)

    raw_meas = obj.get("measurements", [])
    if not isinstance(raw_meas, list):
        raise SchemaError("measurements", "expected a list", source)
    if len(raw_meas) >= modes:
        raise SchemaError("measurements", f"{len(raw_meas)} measurements would leave no mode out of {modes}", source)
    measurements = []
    for i, entry in enumerate(raw_meas):
        loc = f"measurements[{i}]"
        rec = _fields(entry, MEASUREMENT_PARAMS, loc, source, kind_key=None)
        rec["mode"] = _integer(rec["mode"], f"{loc}.mode", source, hi=modes - i)
        rec["phi"] = _number(rec["phi"], f"{loc}.phi", source)
        if rec["outcome"] is not None:
            rec["outcome"] = _number(rec["outcome"], f"{loc}.outcome", source)
        if rec["seed"] is not None:
            rec["seed"] = _integer(rec["seed"], f"{loc}.seed", source, hi=2**64)
        measurements.append(rec)
    return CircuitSpec(modes, tuple(initial), tuple(ops), tuple(measurements))


def initial_state(spec: CircuitSpec) -> GaussianState:
    parts = []
    for rec in spec.initial:
        kind = rec["type"]
        if kind == "vacuum":
            parts.append(states.vacuum(1))
        elif kind == "coherent":
            parts.append(states.coherent(complex(rec["re"], rec["im"])))
        elif kind == "thermal":
            parts.append(states.thermal(rec["nbar"]))
        elif kind == "squeezed":
            parts.append(states.squeezed_vacuum(rec["r"], rec["theta"]))
        else:
            parts.append(states.two_mode_squeezed_vacuum(rec["r"], rec["theta"]))
    return states.tensor(*parts)


def gate_op(rec: dict):
    """``(SymplecticOp, modes)`` for one parsed gate record."""
    kind = rec["type"]
    if kind == "displace":
        return unitaries.displacement([complex(rec["re"], rec["im"])]), [rec["mode"]]
    if kind == "phase":
        return unitaries.phase_shift(rec["phi"]), [rec["mode"]]
    if kind == "beamsplitter":
        return unitaries.beamsplitter(rec["eta"]), rec["modes"]
    if kind == "squeeze":
        return unitaries.squeeze(rec["r"], rec["theta"]), [rec["mode"]]
    return unitaries.two_mode_squeeze(rec["r"], rec["theta"]), rec["modes"]


class CircuitRunError(RuntimeError):
    """A valid circuit failed while running; ``record`` is the measurement index."""

    def __init__(self, record: int, message: str):
        self.record = record
        super().__init__(f"measurements[{record}]: {message}")


def run_circuit(spec: CircuitSpec, seed: int = 0) -> tuple[GaussianState, list[MeasurementRecord]]:
    state = initial_state(spec)
    for rec in spec.ops:
        op, modes = gate_op(rec)
        state = unitaries.apply_on(state, op, modes)
    log = []
    for i, rec in enumerate(spec.measurements):
        mode, phi = rec["mode"], rec["phi"]
        try:
            if rec["outcome"] is not None:
                mu, var = homodyne_distribution(state, mode, phi)
                u, used_seed = rec["outcome"], None
                state = homodyne_condition(state, mode, phi, u)
            else:
                used_seed = rec["seed"] if rec["seed"] is not None else record_seed(seed, i)
                res = sample_homodyne(state, mode, phi, used_seed)
                u, mu, var, state = res.outcome, res.dist_mean, res.dist_var, res.conditional
        except ValueError as exc:
            raise CircuitRunError(i, str(exc)) from exc
        log.append(MeasurementRecord(i, mode, phi, float(u), mu, var, used_seed))
    return state, log


def run_metadata(log: list[MeasurementRecord], seed: int) -> dict:
    meta = default_metadata(rng=RNG_NAME, seed=seed)
    if log:
        meta["measurements"] = [m.as_dict() for m in log]
    return meta
