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
Multiplexed (uniformly controlled) Ry and Rz rotations.

A multiplexor with k select wires is lowered to an alternating sequence of 2**k
rotations on the data wire and 2**k entanglers from the select wires to the data
wire. Splitting the select space in halves, M(t) = M(a) . CX . M(b) . CX with
a = (t_left + t_right) / 2 and b = (t_left - t_right) / 2, because conjugating a
rotation with X flips its sign. Emitting the second half mirrored makes the
entanglers next to the middle one equal, so they cancel and only 2**k remain.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate, GateKind
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import DimensionError, GateIndexError, OptionConflict
from qsdsuite.utils.linalg import num_qubits

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MuxRotationSpec:
    """
    A multiplexed rotation.

    Attributes
    ----------
    axis : GateKind
            GateKind.RY or GateKind.RZ.
    data_qubit : int
            Wire that is rotated.
    select_qubits : tuple
            Select wires, most significant first.
    angles : tuple
            2**k angles, angles[j] is applied when the selects read j.
    """

    axis: GateKind
    data_qubit: int
    select_qubits: Tuple[int, ...]
    angles: Tuple[float, ...]

    def __post_init__(self):
        """Normalize the sequences and check the invariants."""
        object.__setattr__(
            self, "select_qubits", tuple(int(q) for q in self.select_qubits)
        )
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))
        if self.axis not in (GateKind.RY, GateKind.RZ):
            raise ValueError(f"Multiplexed rotations are about y or z, got {self.axis}")
        wires = (self.data_qubit,) + self.select_qubits
        if len(set(wires)) != len(wires):
            raise GateIndexError(f"Wires of a multiplexor must be distinct, got {wires}")
        if len(self.angles) != 2 ** len(self.select_qubits):
            raise DimensionError(
                f"{len(self.select_qubits)} selects need {2 ** len(self.select_qubits)} "
                f"angles, got {len(self.angles)}"
            )

    @property
    def width(self) -> int:
        """Smallest circuit width holding every wire."""
        return max((self.data_qubit,) + self.select_qubits) + 1


def demux_rotation_angles(angles: Sequence[float]) -> np.ndarray:
    """
    Rotation angles of the lowered multiplexor, in emission order.

    Parameters
    ----------
    angles : sequence of float
            2**k multiplexor angles.

    Returns
    -------
    np.ndarray
            2**k angles; entry i is the rotation placed before entangler i.
    """
    angles = np.asarray(angles, dtype=float)
    num_qubits(len(angles))
    if len(angles) == 1:
        return angles.copy()
    half = len(angles) // 2
    left, right = angles[:half], angles[half:]
    return np.concatenate(
        [
            demux_rotation_angles((left + right) / 2),
            demux_rotation_angles((left - right) / 2)[::-1],
        ]
    )


def control_schedule(selects: Sequence[int]) -> List[int]:
    """
    Control wire of each entangler in the lowered multiplexor.

    For selects (s1, s2, s3) this is s3 s2 s3 s1 s3 s2 s3 s1, i.e. the wire whose
    bit flips between consecutive Gray codes, with s1 closing the sequence.
    """
    if not selects:
        return []
    inner = control_schedule(selects[1:])[:-1]
    return inner + [selects[0]] + inner[::-1] + [selects[0]]


def mux_rotation_gates(
    spec: MuxRotationSpec, entangler: GateKind = GateKind.CNOT, reverse: bool = False
) -> List[Gate]:
    """
    Full lowering of a multiplexed rotation as a gate list.

    Parameters
    ----------
    spec : MuxRotationSpec
    entangler : GateKind
            GateKind.CNOT, or GateKind.CZ for y rotations.
    reverse : bool
            Emit the mirrored sequence, which has the same matrix.

    Returns
    -------
    list
            2**k rotations interleaved with 2**k entanglers, a single rotation
            when there are no selects.
    """
    if entangler not in (GateKind.CNOT, GateKind.CZ):
        raise ValueError(f"{entangler} is not an entangler")
    if entangler == GateKind.CZ and spec.axis != GateKind.RY:
        raise OptionConflict("CZ entanglers only lower multiplexed Ry rotations")
    rotations = demux_rotation_angles(spec.angles)
    controls = control_schedule(spec.select_qubits)
    if not controls:
        return [Gate.rotation(spec.axis, spec.data_qubit, rotations[0])]
    gates = []
    for angle, control in zip(rotations, controls):
        gates.append(Gate.rotation(spec.axis, spec.data_qubit, angle))
        gates.append(Gate(entangler, control=control, target=spec.data_qubit))
    if reverse:
        gates.reverse()
    return gates


def synth_mux_rotation(
    spec: MuxRotationSpec,
    entangler: GateKind = GateKind.CNOT,
    reverse: bool = False,
    width: Optional[int] = None,
) -> Circuit:
    """
    Lower a multiplexed rotation to a circuit.

    Parameters
    ----------
    spec : MuxRotationSpec
            Rotation to lower.
    entangler : GateKind
            GateKind.CNOT or GateKind.CZ (y axis only).
    reverse : bool
            Emit the mirrored gate order.
    width : int
            Circuit width, defaults to the smallest one holding the wires.

    Returns
    -------
    Circuit
            Exactly 2**k entanglers and 2**k rotations.
    """
    if width is None:
        width = spec.width
    return Circuit(width, tuple(mux_rotation_gates(spec, entangler, reverse)))


def compact_mux_rotation_gates(
    spec: MuxRotationSpec,
    entangler: GateKind = GateKind.CNOT,
    reverse: bool = False,
    tol: Optional[float] = None,
) -> List[Gate]:
    """
    Lowering that skips trivial multiplexors.

    All angles within tol of zero give no gates, all angles equal give one plain
    rotation. Anything else is the full lowering.
    """
    if tol is None:
        tol = config.tol_angle
    angles = np.asarray(spec.angles)
    if np.max(np.abs(angles)) <= tol:
        return []
    if np.ptp(angles) <= tol:
        return [Gate.rotation(spec.axis, spec.data_qubit, float(angles[0]))]
    return mux_rotation_gates(spec, entangler, reverse)


def join_gates(first: List[Gate], second: List[Gate]) -> List[Gate]:
    """Concatenate two gate lists, cancelling an identical entangler pair at the seam."""
    if first and second and first[-1].is_entangler and first[-1] == second[0]:
        return first[:-1] + second[1:]
    return first + second
