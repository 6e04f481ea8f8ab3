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
Lowering of multiplexors and one-qubit operators to elementary gates.
"""
from .diagonal import DiagonalSpec, synth_diagonal
from .generic import synth_mux_1q
from .one_qubit import ZyzAngles, bloch_to_zero, zyz_angles, zyz_circuit
from .rotations import (
    MuxRotationSpec,
    control_schedule,
    demux_rotation_angles,
    synth_mux_rotation,
)

__all__ = [
    DiagonalSpec.__name__,
    MuxRotationSpec.__name__,
    ZyzAngles.__name__,
    bloch_to_zero.__name__,
    control_schedule.__name__,
    demux_rotation_angles.__name__,
    synth_diagonal.__name__,
    synth_mux_1q.__name__,
    synth_mux_rotation.__name__,
    zyz_angles.__name__,
    zyz_circuit.__name__,
]
