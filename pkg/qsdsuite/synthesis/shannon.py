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
Quantum Shannon decomposition.

The cosine-sine decomposition writes u = (a1 ⊕ b1) Ry-mux (a2 ⊕ b2) with the
multiplexors selected by the leading wire of the block. Both block multiplexors
are demultiplexed into two generic operators on the remaining wires around a
multiplexed Rz, and the four generic operators are decomposed the same way until
one or two wires are left.
"""
import logging
from dataclasses import dataclass
from time import perf_counter
from typing import List, Optional, Tuple, Union

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import Gate, GateKind
from qsdsuite.layout.nearest_neighbor import map_nearest_neighbor
from qsdsuite.multiplexors.one_qubit import zyz_gates
from qsdsuite.multiplexors.rotations import MuxRotationSpec, mux_rotation_gates
from qsdsuite.simulation.verification import (
    SynthesisReport,
    require_exact,
    verify_synthesis,
)
from qsdsuite.synthesis.demultiplex import demultiplex
from qsdsuite.synthesis.options import Method, QsdOptions
from qsdsuite.synthesis.two_qubit import synth_two_qubit, two_qubit_up_to_diagonal
from qsdsuite.utils.exceptions import OptionConflict
from qsdsuite.utils.linalg import as_unitary, cosine_sine_decompose, num_qubits

log = logging.getLogger(__name__)


@dataclass
class _Leaf:
    """A two-qubit operator on the last two wires, lowered after the recursion."""

    matrix: np.ndarray


Item = Union[Gate, _Leaf]


def _mux(
    axis: GateKind,
    data: int,
    selects: Tuple[int, ...],
    angles: np.ndarray,
    nearest_first: bool,
) -> MuxRotationSpec:
    """
    Multiplexed rotation on the wires below data.

    With nearest_first the select order is reversed, so that the closest wire
    controls most entanglers of the ladder; the angles are permuted to match.
    """
    angles = np.asarray(angles, dtype=float)
    if nearest_first:
        angles = angles.reshape((2,) * len(selects)).T.reshape(-1)
        selects = tuple(reversed(selects))
    return MuxRotationSpec(axis, data, selects, tuple(angles))


def _decompose(u: np.ndarray, top: int, options: QsdOptions, items: List[Item]):
    """Append the time ordered pieces of u acting on wires top, top + 1, ..."""
    size = num_qubits(u.shape[0])
    if size == 1:
        items += zyz_gates(u, top)
        return
    if size == 2 and options.base_size == 2:
        items.append(_Leaf(u))
        return

    log.debug(f"QSD node on wires {top}..{top + size - 1}")
    csd = cosine_sine_decompose(u)
    rest = tuple(range(top + 1, top + size))
    ry = _mux(GateKind.RY, top, rest, -csd.thetas, options.nn)
    b1 = csd.b1
    if options.opt_a1:
        # the last CZ of the ladder acts as Z on its control inside b1
        ry_gates = mux_rotation_gates(ry, GateKind.CZ)[:-1]
        shift = top + size - 1 - ry.select_qubits[0]
        negate = ((np.arange(b1.shape[1]) >> shift) & 1).astype(bool)
        b1 = b1.copy()
        b1[:, negate] *= -1
    else:
        ry_gates = mux_rotation_gates(ry)
    v2, rz2, w2 = demultiplex(csd.a2, csd.b2)
    v1, rz1, w1 = demultiplex(csd.a1, b1)

    _decompose(w2, top + 1, options, items)
    items += mux_rotation_gates(_mux(GateKind.RZ, top, rest, rz2, options.nn))
    _decompose(v2, top + 1, options, items)
    items += ry_gates
    _decompose(w1, top + 1, options, items)
    items += mux_rotation_gates(_mux(GateKind.RZ, top, rest, rz1, options.nn))
    _decompose(v1, top + 1, options, items)


def _lower(items: List[Item], width: int, options: QsdOptions) -> List[Gate]:
    """
    Replace the two-qubit leaves by gates.

    With diagonal migration every leaf but the last is synthesized up to a
    diagonal on the last two wires. That diagonal commutes with the multiplexed
    rotations in between, whose data wires lie above, and is merged into the
    next leaf.
    """
    wires = (width - 2, width - 1)
    last = max((k for k, item in enumerate(items) if isinstance(item, _Leaf)), default=-1)
    pending: Optional[np.ndarray] = None
    gates: List[Gate] = []
    for index, item in enumerate(items):
        if isinstance(item, Gate):
            gates.append(item)
            continue
        matrix = item.matrix
        if pending is not None:
            matrix = matrix * pending[None, :]
        if options.opt_a2 and index != last:
            circuit, diagonal = two_qubit_up_to_diagonal(matrix, wires, width)
            pending = np.exp(1j * np.asarray(diagonal.phases))
        else:
            circuit = synth_two_qubit(matrix, wires, width)
        gates += circuit.gates
    return gates


def synth_qsd(
    u: np.ndarray, options: Optional[QsdOptions] = None
) -> Tuple[Circuit, SynthesisReport]:
    """
    Synthesize a unitary with the quantum Shannon decomposition.

    Parameters
    ----------
    u : np.ndarray
            Unitary on n qubits, n >= options.base_size.
    options : QsdOptions
            Recursion base and optimizations, defaults to QsdOptions().

    Returns
    -------
    circuit : Circuit
            Exact circuit of u, global phase included.
    report : SynthesisReport
            Gate counts and reconstruction error of the circuit.
    """
    if options is None:
        options = QsdOptions()
    start = perf_counter()
    u = as_unitary(u)
    n = num_qubits(u.shape[0])
    if n < options.base_size:
        raise OptionConflict(
            f"A {n}-qubit unitary is below the recursion base {options.base_size}"
        )

    items: List[Item] = []
    _decompose(u, 0, options, items)
    circuit = Circuit(n, tuple(_lower(items, n, options)))
    if options.nn:
        circuit = map_nearest_neighbor(circuit)
    elapsed = perf_counter() - start

    report = verify_synthesis(
        u, circuit, method=Method.QSD.value, options=options, elapsed=elapsed
    )
    log.info(
        f"QSD ({options.label}) on {n} qubits: {report.counts.cnot_equivalent} CNOTs, "
        f"error {report.recon_err:.2e}"
    )
    require_exact(report)
    return circuit, report
