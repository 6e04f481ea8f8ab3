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
Multiplexors with one data wire and an arbitrary unitary per select value.
"""
import logging
from typing import Optional, Sequence

import numpy as np

from qsdsuite.circuit.circuit import Circuit
from qsdsuite.circuit.gates import GateKind
from qsdsuite.multiplexors.diagonal import DiagonalSpec, diagonal_gates
from qsdsuite.multiplexors.one_qubit import zyz_angles
from qsdsuite.multiplexors.rotations import (
    MuxRotationSpec,
    compact_mux_rotation_gates,
    join_gates,
)
from qsdsuite.utils.config import config
from qsdsuite.utils.exceptions import DimensionError, NotUnitaryError
from qsdsuite.utils.linalg import unitary_deviation

log = logging.getLogger(__name__)


def synth_mux_1q(
    data_qubit: int,
    selects: Sequence[int],
    cases: Sequence[np.ndarray],
    width: Optional[int] = None,
) -> Circuit:
    """
    Lower a one-data-wire multiplexor.

    Every case is split as exp(i phi) Rz(alpha) Ry(beta) Rz(gamma). The circuit
    is the multiplexed Rz(gamma), Ry(beta) and Rz(alpha) on the data wire
    followed by diag(exp(i phi)) on the select wires.

    Parameters
    ----------
    data_qubit : int
            Data wire.
    selects : sequence of int
            Select wires, most significant first.
    cases : sequence of np.ndarray
            2**len(selects) one-qubit unitaries.
    width : int
            Circuit width, defaults to the smallest one holding the wires.

    Returns
    -------
    Circuit
    """
    selects = tuple(selects)
    if len(cases) != 2 ** len(selects):
        raise DimensionError(f"{len(selects)} selects need {2 ** len(selects)} cases")
    for case in cases:
        deviation = unitary_deviation(np.asarray(case, dtype=complex))
        if not deviation <= config.tol_unitary:
            raise NotUnitaryError(deviation, config.tol_unitary)
    if width is None:
        width = max((data_qubit,) + selects) + 1

    angles = [zyz_angles(case) for case in cases]

    def mux(axis: GateKind, values) -> MuxRotationSpec:
        return MuxRotationSpec(axis, data_qubit, selects, tuple(values))

    # Rz ladders end and the mirrored Ry ladder starts on the same CNOT
    gates = compact_mux_rotation_gates(mux(GateKind.RZ, [a.gamma for a in angles]))
    betas = mux(GateKind.RY, [a.beta for a in angles])
    ry = compact_mux_rotation_gates(betas, reverse=True)
    gates = join_gates(gates, ry)
    gates = join_gates(
        gates, compact_mux_rotation_gates(mux(GateKind.RZ, [a.alpha for a in angles]))
    )
    gates += diagonal_gates(DiagonalSpec(selects, tuple(a.phi for a in angles)))
    return Circuit(width, tuple(gates))
