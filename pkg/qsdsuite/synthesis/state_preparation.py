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
State preparation by repeatedly disentangling the least significant qubit.
"""
import logging
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate, GateKind
from qsdsuite.multiplexors.one_qubit import bloch_to_zero
from qsdsuite.multiplexors.rotations import (
    MuxRotationSpec,
    compact_mux_rotation_gates,
    join_gates,
)
from qsdsuite.utils.config import config
from qsdsuite.utils.linalg import as_state, num_qubits
from qsdsuite.utils.meta_functions import parse_bitstring, timeit

log = logging.getLogger(__name__)


def disentangling_gates(
    data_qubit: int,
    selects: Sequence[int],
    rz_angles: Sequence[float],
    ry_angles: Sequence[float],
) -> List[Gate]:
    """
    Multiplexed Rz followed by the mirrored multiplexed Ry on one data wire.

    The Rz ladder ends and the mirrored Ry ladder starts with the same CNOT, so
    the pair costs 2**(k+1) - 2 CNOTs for k selects.
    """
    selects = tuple(selects)
    rz = MuxRotationSpec(GateKind.RZ, data_qubit, selects, tuple(rz_angles))
    ry = MuxRotationSpec(GateKind.RY, data_qubit, selects, tuple(ry_angles))
    return join_gates(
        compact_mux_rotation_gates(rz), compact_mux_rotation_gates(ry, reverse=True)
    )


def _fill_free_blocks(values: np.ndarray, free: np.ndarray, tol: float) -> np.ndarray:
    """Give blocks marked free the common value of the others, if there is one."""
    fixed = values[~free]
    if fixed.size and free.any() and np.ptp(fixed) <= tol:
        values = values.copy()
        values[free] = fixed[0]
    return values


def _block_angles(
    psi: np.ndarray, target: int, free_zero_blocks: bool
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Bloch angles and residual amplitudes of each two-amplitude block."""
    blocks = psi.reshape(-1, 2)
    results = [bloch_to_zero(block, target) for block in blocks]
    phis = np.array([r[0] for r in results])
    thetas = np.array([r[1] for r in results])
    residual = np.array([r[2] for r in results], dtype=complex)
    if free_zero_blocks:
        zero = np.all(np.abs(blocks) <= config.tol_zero, axis=1)
        phis = _fill_free_blocks(phis, zero, config.tol_angle)
        thetas = _fill_free_blocks(thetas, zero, config.tol_angle)
    return phis, thetas, residual


def disentangle_lsb(
    psi: np.ndarray,
    target: int = 0,
    width: Optional[int] = None,
    free_zero_blocks: bool = False,
) -> Tuple[Circuit, np.ndarray]:
    """
    Rotate the least significant qubit of a state onto a basis state.

    Parameters
    ----------
    psi : np.ndarray
            State on n + 1 qubits; the circuit acts on wires 0..n with wire n as
            data and the others as selects.
    target : int
            Basis state 0 or 1 for the last qubit.
    width : int
            Circuit width, at least n + 1. Defaults to n + 1.
    free_zero_blocks : bool
            Let blocks with no amplitude take whatever angle the other blocks
            share, which lets trivial multiplexors collapse. Blocks keep the
            identity otherwise.

    Returns
    -------
    circuit : Circuit
            Circuit with circuit . psi = residual ⊗ |target>.
    residual : np.ndarray
            State on the first n qubits, normalized like psi.
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    size = num_qubits(psi.shape[0])
    if size < 1:
        raise ValueError("disentangle_lsb needs at least one qubit")
    if width is None:
        width = size
    phis, thetas, residual = _block_angles(psi, target, free_zero_blocks)
    gates = disentangling_gates(size - 1, range(size - 1), -phis, -thetas)
    return Circuit(width, tuple(gates)), residual


@timeit
def prepare_state(
    psi: np.ndarray, target_bits: Union[str, Sequence[int], None] = None
) -> Circuit:
    """
    Circuit preparing a state from a basis state.

    Parameters
    ----------
    psi : np.ndarray
            Normalized state on n qubits.
    target_bits : str or sequence of int
            Basis state the circuit starts from, qubit 0 first. Defaults to all
            zeros.

    Returns
    -------
    Circuit
            C with C |target_bits> = psi exactly, global phase included. Uses
            2**(n+1) - 2n - 2 CNOTs for a generic state.
    """
    psi = as_state(psi)
    n = num_qubits(psi.shape[0])
    if target_bits is None:
        target_bits = [0] * n
    elif isinstance(target_bits, str):
        target_bits = parse_bitstring(target_bits, n)
    target_bits = [int(b) for b in target_bits]
    if len(target_bits) != n:
        raise ValueError(f"Expected {n} target bits, got {len(target_bits)}")

    gates: List[Gate] = []
    current = psi
    for size in range(n, 0, -1):
        step, current = disentangle_lsb(
            current, target_bits[size - 1], width=n, free_zero_blocks=True
        )
        log.debug(f"disentangled qubit {size - 1}: {len(step)} gates")
        gates += step.gates
    # whatever is left is a unit-modulus scalar
    disentangler = Circuit(n, tuple(gates))
    circuit = disentangler.inverse()
    phase = float(np.angle(current[0]))
    if phase != 0.0:
        circuit = circuit + Circuit(n, (Gate.phase(phase),))
    log.info(f"prepared {n}-qubit state with {circuit.counts().cnot_equivalent} CNOTs")
    return circuit
