"""
Circuit files and the command line
==================================

The ``cvgauss`` command runs JSON circuit descriptions and works on JSON
state dumps. This script writes a circuit, runs it through the CLI entry
point in-process and inspects the results.
"""

import json
import tempfile
from pathlib import Path

import cvgauss as cg
from cvgauss.cli import main
from cvgauss.serialization import read_state, write_state

workdir = Path(tempfile.mkdtemp(prefix="cvgauss-tutorial-"))

###############################################################################
# A heralding circuit
# -------------------
# Two-mode squeezing feeds a beamsplitter with a coherent state. Mode 2 is
# measured with a fixed outcome, then (after re-indexing) mode 1 is measured
# with a sampled outcome.

circuit = {
    "modes": 3,
    "initial": [{"type": "tmsv", "r": 0.8}, {"type": "coherent", "re": 0.5}],
    "ops": [
        {"type": "beamsplitter", "modes": [1, 2], "eta": 0.6},
        {"type": "phase", "mode": 0, "phi": 0.25},
    ],
    "measurements": [
        {"mode": 2, "phi": 0.0, "outcome": 0.4},
        {"mode": 1, "phi": 1.5707963267948966},
    ],
}
circuit_path = workdir / "circuit.json"
circuit_path.write_text(json.dumps(circuit, indent=2))

###############################################################################
# Running it
# ----------
# ``main`` takes the same arguments as the shell command
# ``cvgauss run circuit.json --seed 7 --out final.json``.

final_path = workdir / "final.json"
code = main(["run", str(circuit_path), "--seed", "7", "--out", str(final_path)])
state, meta = read_state(final_path)
print("exit code:", code)
print("remaining modes:", state.n_modes)
for rec in meta["measurements"]:
    print(f"  record {rec['record']}: mode {rec['mode']} outcome {rec['outcome']:.6f} seed {rec['seed']}")

###############################################################################
# The same seed reproduces the file byte for byte.

again = workdir / "again.json"
main(["run", str(circuit_path), "--seed", "7", "--out", str(again)])
print("identical rerun:", final_path.read_bytes() == again.read_bytes())

###############################################################################
# Analysis commands
# -----------------
# States written by the library can be fed to the other subcommands.

write_state(workdir / "vac.json", cg.vacuum(1))
write_state(workdir / "th.json", cg.thermal(3.0))
main(["fidelity", str(workdir / "vac.json"), str(workdir / "th.json")])
main(["purity", str(final_path)])
main(["sample", str(workdir / "vac.json"), "--count", "3", "--seed", "1"])

###############################################################################
# Invalid input is reported with the offending field and exit status 2.

bad = dict(circuit, ops=[{"type": "beamsplitter", "modes": [1, 2], "eta": 1.5}])
bad_path = workdir / "bad.json"
bad_path.write_text(json.dumps(bad))
print("exit code for a bad circuit:", main(["run", str(bad_path)]))
