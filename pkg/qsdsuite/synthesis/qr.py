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
Column by column synthesis of a unitary.

Step j builds a circuit C_j that sends column j of the current matrix to a
multiple of |j> while leaving |0>, ..., |j-1> alone. After 2**n - 1 steps the
matrix is diagonal, so u = C_0^dag ... C_{N-2}^dag D.

C_j disentangles one qubit per level, least significant first. At a level with
data wire d, the state is r ⊗ |low bits of j>. Blocks below the one holding j
are zero and get the identity. The block holding j is rotated as needed, which
also moves basis states |i> that share its select value and low bits. When the
target bit of j is 0 and its low bits are not all 0, some of those |i> come
before j; the level then also selects on the low wires where j has a 1 and
rotates that block only when all of them read 1.
"""
import logging
from typing import List, Tuple

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate
from qsdsuite.multiplexors.diagonal import DiagonalSpec, diagonal_gates
from qsdsuite.multiplexors.one_qubit import bloch_to_zero
from qsdsuite.simulation.statevector import apply_circuit
from qsdsuite.simulation.verification import require_exact, verify_synthesis
from qsdsuite.synthesis.options import Method
from qsdsuite.synthesis.state_preparation import disentangling_gates
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import SynthesisFailure
from qsdsuite.utils.linalg import as_unitary, num_qubits
from qsdsuite.utils.meta_functions import timeit

log = logging.getLogger(__name__)


def _level_bits(j: int, level: int, n: int) -> Tuple[int, int, int, int]:
    """Data wire, target bit, low bits and select value of j at a level."""
    d = n - level
    t = (j >> (level - 1)) & 1
    t_low = j & ((1 << (level - 1)) - 1)
    return d, t, t_low, j >> level


def _low_selects(t_low: int, n: int) -> List[int]:
    """Wires of the set bits of t_low in wire order."""
    return sorted(n - 1 - b for b in range(t_low.bit_length()) if (t_low >> b) & 1)


def _step_gates(column: np.ndarray, j: int, n: int) -> List[Gate]:
    """Gates of C_j for the current column j."""
    r = np.asarray(column, dtype=complex)
    gates: List[Gate] = []
    for level in range(1, n + 1):
        d, t, t_low, j_high = _level_bits(j, level, n)
        blocks = r.reshape(2**d, 2)
        phis = np.zeros(2**d)
        thetas = np.zeros(2**d)
        residual = np.zeros(2**d, dtype=complex)
        for m, block in enumerate(blocks):
            if m < j_high or (m == j_high and t == 1):
                # these blocks vanish exactly, keep the identity on them
                residual[m] = block[t]
            else:
                phis[m], thetas[m], residual[m] = bloch_to_zero(block, t)

        selects = list(range(d))
        rz, ry = -phis, -thetas
        if t == 0 and t_low != 0:
            low = _low_selects(t_low, n)
            pc = len(low)
            full = (1 << pc) - 1
            rz = np.zeros(2 ** (d + pc))
            ry = np.zeros(2 ** (d + pc))
            for m in range(2**d):
                for bits in range(2**pc):
                    if m == j_high and bits != full:
                        continue
                    rz[(m << pc) | bits] = -phis[m]
                    ry[(m << pc) | bits] = -thetas[m]
            selects += low
        gates += disentangling_gates(d, selects, rz, ry)
        r = residual
    return gates


def qr_cnot_count(n: int) -> int:
    """
    CNOT count of synth_qr on a generic n-qubit unitary.

    A level costs 2**(k+1) - 2 CNOTs for k selects. A level is free when every
    block of it is forced to the identity, i.e. j has ones from the target bit
    upwards.
    """
    total = 0
    for j in range(2**n - 1):
        for level in range(1, n + 1):
            d, t, t_low, j_high = _level_bits(j, level, n)
            if t == 1 and j_high == 2**d - 1:
                continue
            pc = bin(t_low).count("1") if t == 0 else 0
            k = d + pc
            if k >= 1:
                total += 2 ** (k + 1) - 2
    return total + max(0, 2**n - 2)


@timeit
def synth_qr(u: np.ndarray) -> Circuit:
    """
    Synthesize a unitary column by column.

    Parameters
    ----------
    u : np.ndarray
            Unitary on n >= 1 qubits.

    Returns
    -------
    Circuit
            Exact circuit of u, global phase included, with qr_cnot_count(n)
            CNOTs for generic input.
    """
    u = as_unitary(u)
    n = num_qubits(u.shape[0])
    if n < 1:
        raise ValueError("synth_qr needs at least one qubit")
    work = u.copy()
    steps = []
    for j in range(2**n - 1):
        step = Circuit(n, tuple(_step_gates(work[:, j], j, n)))
        work = apply_circuit(step, work)
        steps.append(step)
        log.debug(f"column {j}: {step.counts().cnot_equivalent} CNOTs")

    off_diagonal = float(np.max(np.abs(work - np.diag(np.diag(work)))))
    if not off_diagonal <= config.tol_template:
        raise SynthesisFailure(
            f"Column elimination left off-diagonal entries of size {off_diagonal:.3e}"
        )
    gates = diagonal_gates(DiagonalSpec(tuple(range(n)), tuple(np.angle(np.diag(work)))))
    for step in reversed(steps):
        gates += step.inverse().gates
    circuit = Circuit(n, tuple(gates))
    require_exact(verify_synthesis(u, circuit, method=Method.QR.value))
    log.info(f"QR synthesis on {n} qubits: {circuit.counts().cnot_equivalent} CNOTs")
    return circuit
