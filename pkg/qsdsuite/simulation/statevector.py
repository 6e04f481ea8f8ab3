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
State vector simulation.

Amplitudes are held as a tensor with one axis of length two per qubit, qubit 0
first, plus a trailing batch axis. One-qubit gates contract a 2x2 matrix into
their axis, CNOT and CZ act on slices. No gate matrix larger than 2x2 is built.
"""
import logging

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate, GateKind, rotation_matrix
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import DimensionError, WidthTooLarge
from qsdsuite.utils.linalg import num_qubits

log = logging.getLogger(__name__)


def _apply(tensor: np.ndarray, gate: Gate) -> np.ndarray:
    """Apply a gate to a (2,)*n + (batch,) tensor and return a new tensor."""
    if gate.kind == GateKind.PHASE:
        return np.exp(1j * gate.angle) * tensor
    if gate.is_rotation:
        m = rotation_matrix(gate.kind, gate.angle)
        out = np.tensordot(m, tensor, axes=([1], [gate.target]))
        return np.moveaxis(out, 0, gate.target)

    out = tensor.copy()
    index = [slice(None)] * tensor.ndim
    index[gate.control] = 1
    if gate.kind == GateKind.CNOT:
        # the control axis disappears from the slice
        axis = gate.target if gate.target < gate.control else gate.target - 1
        out[tuple(index)] = np.flip(tensor[tuple(index)], axis=axis)
    else:
        index[gate.target] = 1
        out[tuple(index)] *= -1
    return out


def apply_gate(state: np.ndarray, gate: Gate) -> np.ndarray:
    """
    Apply one gate to a state vector.

    Parameters
    ----------
    state : np.ndarray
            Amplitudes of length 2**n.
    gate : Gate
            Gate acting on wires below n.

    Returns
    -------
    np.ndarray
            New state vector, the input is not modified.
    """
    state = np.asarray(state, dtype=complex)
    width = num_qubits(state.shape[0])
    gate.check_width(width)
    tensor = state.reshape((2,) * width + (1,))
    return _apply(tensor, gate).reshape(-1)


def apply_circuit(circuit: Circuit, states: np.ndarray) -> np.ndarray:
    """
    Run a circuit on a batch of states.

    Parameters
    ----------
    circuit : Circuit
    states : np.ndarray
            Either one state of length 2**width or a (2**width, k) array whose
            columns are states.

    Returns
    -------
    np.ndarray
            Output with the shape of states.
    """
    states = np.asarray(states, dtype=complex)
    dim = 2**circuit.width
    if states.shape[0] != dim:
        raise DimensionError(
            f"Width {circuit.width} does not match {states.shape[0]} amplitudes"
        )
    batch = 1 if states.ndim == 1 else states.shape[1]
    tensor = states.reshape((2,) * circuit.width + (batch,))
    for gate in circuit.gates:
        tensor = _apply(tensor, gate)
    return tensor.reshape(states.shape)


def simulate(circuit: Circuit, state: np.ndarray) -> np.ndarray:
    """Final state of a circuit started in state."""
    return apply_circuit(circuit, np.asarray(state, dtype=complex).reshape(-1))


def circuit_to_unitary(circuit: Circuit) -> np.ndarray:
    """
    Matrix of a circuit.

    Column b is the circuit applied to the basis state |b>, so the matrix is the
    product of the gate matrices in reverse gate order.

    Parameters
    ----------
    circuit : Circuit

    Returns
    -------
    np.ndarray
            2**width x 2**width complex matrix.

    Raises
    ------
    WidthTooLarge
            If the width exceeds config.max_verify_width.
    """
    if circuit.width > config.max_verify_width:
        raise WidthTooLarge(
            f"Refusing to build a dense matrix on {circuit.width} qubits "
            f"(max_verify_width = {config.max_verify_width})"
        )
    return apply_circuit(circuit, np.eye(2**circuit.width, dtype=complex))
