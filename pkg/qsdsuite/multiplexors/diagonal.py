"""
QSDSuite: A Zincwarecode package.

License
-------
This program and the accompanying materials are made available under the terms
of the Eclipse Public License v2.0 which accompanies this distribution, and is
available at https://www.eclipse.org/legal/epl-v20.html

SPDX-License-Identifier: EPL-2.0

Copyright Contributors to the Zincwarecode Project.

Summary
-------
Diagonal operators as circuits of Rz, CNOT and a global phase.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate, GateKind
from qsdsuite.multiplexors.rotations import MuxRotationSpec, compact_mux_rotation_gates
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import DimensionError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalSpec:
    """
    The operator diag(exp(i phases[j])) on a list of wires.

    Attributes
    ----------
    qubits : tuple
            Wires, most significant first.
    phases : tuple
            2**len(qubits) phases.
    """

    qubits: Tuple[int, ...]
    phases: Tuple[float, ...]

    def __post_init__(self):
        """Normalize the sequences and check the length."""
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        object.__setattr__(self, "phases", tuple(float(p) for p in self.phases))
        if len(self.phases) != 2 ** len(self.qubits):
            raise DimensionError(
                f"{len(self.qubits)} wires need {2 ** len(self.qubits)} phases, "
                f"got {len(self.phases)}"
            )

    def matrix(self) -> np.ndarray:
        """Dense diagonal matrix on the listed wires."""
        return np.diag(np.exp(1j * np.asarray(self.phases)))


def diagonal_gates(spec: DiagonalSpec, tol: Optional[float] = None) -> List[Gate]:
    """
    Gate list of a diagonal operator.

    Neighbouring phases (p0, p1) along the last wire factor as
    exp(i (p0 + p1) / 2) Rz(p1 - p0). The Rz angles form a multiplexor on the
    last wire and the mean phases a diagonal on the remaining ones.
    """
    if tol is None:
        tol = config.tol_angle
    phases = np.asarray(spec.phases, dtype=float)
    qubits = list(spec.qubits)
    gates: List[Gate] = []
    while qubits:
        pairs = phases.reshape(-1, 2)
        rz = MuxRotationSpec(
            axis=GateKind.RZ,
            data_qubit=qubits[-1],
            select_qubits=tuple(qubits[:-1]),
            angles=tuple(pairs[:, 1] - pairs[:, 0]),
        )
        gates += compact_mux_rotation_gates(rz, tol=tol)
        phases = pairs.mean(axis=1)
        qubits.pop()
    if abs(phases[0]) > tol:
        gates.append(Gate.phase(float(phases[0])))
    return gates


def synth_diagonal(spec: DiagonalSpec, width: Optional[int] = None) -> Circuit:
    """
    Circuit of a diagonal operator, global phase included.

    Parameters
    ----------
    spec : DiagonalSpec
            Operator to synthesize.
    width : int
            Circuit width, defaults to one more than the largest wire.

    Returns
    -------
    Circuit
            Gates from {RZ, CNOT, PHASE}, 2**m - 2 CNOTs for m >= 2 generic wires.
    """
    if width is None:
        width = max(spec.qubits, default=-1) + 1
    gates = diagonal_gates(spec)
    log.debug(f"diagonal on {len(spec.qubits)} wires: {len(gates)} gates")
    return Circuit(width, tuple(gates))
