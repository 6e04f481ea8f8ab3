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
Local simplification of circuits.

A single forward pass. Each incoming gate looks back through the gates it
commutes with for a partner: an identical entangler cancels, a rotation about the
same axis on the same wire merges. Global phases are summed into one PHASE gate
at the end of the circuit. The matrix is preserved up to the dropped angles.
"""
import logging
from typing import List, Optional

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import DIAGONAL, Gate, GateKind
from qsdsuite.utils.config import config

log = logging.getLogger(__name__)


def commutes(first: Gate, second: Gate) -> bool:
    """
    Check a sufficient condition for two gates to commute.

    Parameters
    ----------
    first, second : Gate

    Returns
    -------
    bool
            True when the gates are known to commute. False means unknown.
    """
    if not set(first.qubits) & set(second.qubits):
        return True
    if first.kind in DIAGONAL and second.kind in DIAGONAL:
        return True
    if first.kind == GateKind.CNOT and second.kind == GateKind.CNOT:
        return first.control != second.target and second.control != first.target
    for cx, other in ((first, second), (second, first)):
        if cx.kind != GateKind.CNOT:
            continue
        if other.kind == GateKind.RZ:
            return other.target == cx.control
        if other.kind == GateKind.RX:
            return other.target == cx.target
        if other.kind == GateKind.CZ:
            return cx.target not in other.qubits
    return False


def _combine(earlier: Gate, later: Gate) -> Optional[List[Gate]]:
    """Replacement for an adjacent pair, or None if the pair does not simplify."""
    same_wire = earlier.kind == later.kind and earlier.target == later.target
    if earlier.is_rotation and same_wire:
        return [Gate.rotation(earlier.kind, earlier.target, earlier.angle + later.angle)]
    if earlier.kind == GateKind.CNOT and later == earlier:
        return []
    if (
        earlier.kind == GateKind.CZ
        and later.kind == GateKind.CZ
        and set(earlier.qubits) == set(later.qubits)
    ):
        return []
    return None


def peephole_simplify(circuit: Circuit, tol: Optional[float] = None) -> Circuit:
    """
    Cancel entangler pairs, merge rotations and drop negligible angles.

    Parameters
    ----------
    circuit : Circuit
            Circuit to simplify.
    tol : float
            Rotations and the total phase with a magnitude at most tol are
            dropped, defaults to config.tol_angle.

    Returns
    -------
    Circuit
            Equivalent circuit with no more gates of any kind.
    """
    if tol is None:
        tol = config.tol_angle
    out: List[Gate] = []
    total_phase = 0.0
    for gate in circuit.gates:
        if gate.kind == GateKind.PHASE:
            total_phase += gate.angle
            continue
        if gate.is_rotation and abs(gate.angle) <= tol:
            continue
        placed = False
        for position in range(len(out) - 1, -1, -1):
            replacement = _combine(out[position], gate)
            if replacement is not None:
                replacement = [g for g in replacement if abs(g.angle) > tol]
                out[position : position + 1] = replacement
                placed = True
                break
            if not commutes(out[position], gate):
                break
        if not placed:
            out.append(gate)
    if abs(total_phase) > tol:
        out.append(Gate.phase(total_phase))
    log.debug(f"peephole: {len(circuit.gates)} -> {len(out)} gates")
    return Circuit(circuit.width, tuple(out))
