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
Mapping circuits onto a line of qubits where only neighbours interact.
"""
import logging
from typing import List, Optional, Sequence

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate, GateKind

log = logging.getLogger(__name__)


def _fan_out(path: Sequence[int]) -> List[Gate]:
    """
    Nearest-neighbour CNOTs adding the first wire of path onto all the others.

    Over GF(2) the descending ladder leaves x_j + x_(j-1) on every wire past the
    second, the middle CNOT adds x_0 to the second wire and the ascending ladder
    telescopes everything to x_j + x_0. Uses 2k - 1 gates for k = len(path) - 1.
    """
    k = len(path) - 1
    down = [Gate.cx(path[i], path[i + 1]) for i in range(k - 1, 0, -1)]
    up = [Gate.cx(path[i], path[i + 1]) for i in range(1, k)]
    return down + [Gate.cx(path[0], path[1])] + up


def long_cnot_gates(control: int, target: int) -> List[Gate]:
    """Gate list of expand_long_cnot."""
    if control == target:
        raise ValueError(f"CNOT needs distinct wires, got {control} twice")
    step = 1 if target > control else -1
    path = list(range(control, target + step, step))
    if len(path) == 2:
        return [Gate.cx(control, target)]
    # the second fan-out undoes the first one on the intermediate wires
    return _fan_out(path) + _fan_out(path[:-1])


def expand_long_cnot(control: int, target: int, width: Optional[int] = None) -> Circuit:
    """
    Long-range CNOT as a ladder of nearest-neighbour CNOTs.

    Parameters
    ----------
    control, target : int
            Wires of the CNOT.
    width : int
            Circuit width, defaults to the smallest one holding both wires.

    Returns
    -------
    Circuit
            4k - 4 CNOTs for distance k >= 2, the CNOT itself for k = 1.
    """
    if width is None:
        width = max(control, target) + 1
    return Circuit(width, tuple(long_cnot_gates(control, target)))


def _map_gate(gate: Gate) -> List[Gate]:
    if not gate.is_entangler or abs(gate.control - gate.target) <= 1:
        return [gate]
    if gate.kind == GateKind.CNOT:
        return long_cnot_gates(gate.control, gate.target)
    # CZ = Ry(pi/2) CNOT Ry(-pi/2) on the target
    return (
        [Gate.ry(gate.target, -np.pi / 2)]
        + long_cnot_gates(gate.control, gate.target)
        + [Gate.ry(gate.target, np.pi / 2)]
    )


def map_nearest_neighbor(circuit: Circuit) -> Circuit:
    """
    Rewrite every long-range entangler with nearest-neighbour CNOTs.

    Wires keep their positions; local gates are passed through untouched.

    Parameters
    ----------
    circuit : Circuit

    Returns
    -------
    Circuit
            Circuit with the same matrix and only adjacent two-qubit gates.
    """
    gates: List[Gate] = []
    for gate in circuit.gates:
        gates += _map_gate(gate)
    mapped = Circuit(circuit.width, tuple(gates))
    log.debug(
        f"nearest-neighbour mapping: {circuit.counts().cnot_equivalent} -> "
        f"{mapped.counts().cnot_equivalent} CNOTs"
    )
    return mapped
